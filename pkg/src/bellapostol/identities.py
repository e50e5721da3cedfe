"""Exact verification of the identities satisfied by the Bell-based Apostol-type polynomials.

Each verifier builds both sides as canonical :class:`BiPoly` values for
``n = 0..n_max`` at one parameter point and compares them exactly.  The
shift ``a`` in 3.6 is sampled at more rational points than its degree, so
passing at every sample is equivalent to the polynomial identity.  The
addition formula 4.1 is compared coefficient by coefficient in all four
variables ``a, b, X1, X2``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .backend import Q, format_rational, to_q
from .errors import PoleAtZero
from .exact import falling_factorial, stirling2
from .families import (
    apostol_bernoulli, apostol_bernoulli_direct, apostol_euler, apostol_euler_direct,
    apostol_genocchi, apostol_genocchi_direct, apostol_type_table, bell_apostol_egf,
    bell_apostol_table, bell_bivariate_table, bell_classical_table,
)
from .poly import X1, BiPoly, linear_combination
from .series import egf_coeff

DEFAULT_ALPHAS = (0, 1, 2, 3)
DEFAULT_LAMBDAS = (Q(1), Q(2), Q(-1, 2), Q(-1), Q(3))
DEFAULT_ETAS = (-1, 0, 1, 2)
DEFAULT_DELTAS = (0, 1, 2)
DEFAULT_NMAX = 10

BASE_SAMPLES = (Q(0), Q(1), Q(-1), Q(1, 2), Q(3), Q(-5, 2), Q(7))


class Status(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class GridPoint:
    alpha: int
    lam: object
    eta: int
    delta: int
    alpha2: Optional[int] = None  # second order, identity 4.1 only

    def __post_init__(self):
        object.__setattr__(self, "lam", to_q(self.lam))

    @property
    def total_alpha(self) -> int:
        return self.alpha + (self.alpha2 or 0)

    def is_singular(self) -> bool:
        return self.lam == -1 and self.delta == 0 and self.total_alpha >= 1

    def to_json(self) -> dict:
        out = {"alpha": self.alpha, "lambda": format_rational(self.lam),
               "eta": self.eta, "delta": self.delta}
        if self.alpha2 is not None:
            out["alpha2"] = self.alpha2
        return out

    def label(self) -> str:
        a = f"alpha={self.alpha}" if self.alpha2 is None else f"alpha1={self.alpha} alpha2={self.alpha2}"
        return f"{a} lambda={format_rational(self.lam)} eta={self.eta} delta={self.delta}"


@dataclass(frozen=True)
class Failure:
    """First mismatching row: both sides as canonical text and as term lists."""

    n: int
    lhs: str
    rhs: str
    sample: Optional[str] = None
    lhs_terms: Tuple[dict, ...] = ()
    rhs_terms: Tuple[dict, ...] = ()

    @classmethod
    def of(cls, n: int, lhs, rhs, sample: Optional[str] = None) -> "Failure":
        return cls(n, lhs.render(), rhs.render(), sample, tuple(lhs.to_json()), tuple(rhs.to_json()))

    def to_json(self) -> dict:
        out = {"n": self.n, "lhs": list(self.lhs_terms), "rhs": list(self.rhs_terms),
               "lhs_text": self.lhs, "rhs_text": self.rhs}
        if self.sample is not None:
            out["sample"] = self.sample
        return out


@dataclass(frozen=True)
class VerifyReport:
    theorem_id: str
    point: GridPoint
    n_max: int
    status: Status
    first_failure: Optional[Failure] = None
    notes: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self):
        if (self.status is Status.FAIL) != (self.first_failure is not None):
            raise ValueError("a report carries a failure exactly when its status is FAIL")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem_id,
            "params": self.point.to_json(),
            "n_max": self.n_max,
            "status": self.status.value,
            "first_failure": None if self.first_failure is None else self.first_failure.to_json(),
            "notes": dict(self.notes),
        }

    def to_text(self) -> str:
        line = f"{self.status.value.upper():4} {self.theorem_id:<12} {self.point.label()} nmax={self.n_max}"
        for k, v in self.notes:
            line += f" [{k}: {v}]"
        if self.first_failure is not None:
            f = self.first_failure
            at = f" at {f.sample}" if f.sample else ""
            line += f"\n     n={f.n}{at}\n     lhs: {f.lhs}\n     rhs: {f.rhs}"
        return line


@dataclass(frozen=True)
class Grid:
    alphas: Tuple[int, ...] = DEFAULT_ALPHAS
    lambdas: Tuple = DEFAULT_LAMBDAS
    etas: Tuple[int, ...] = DEFAULT_ETAS
    deltas: Tuple[int, ...] = DEFAULT_DELTAS

    def points(self) -> List[GridPoint]:
        return [GridPoint(a, lam, e, d) for a, lam, e, d in
                itertools.product(self.alphas, self.lambdas, self.etas, self.deltas)]

    def order_one_points(self) -> List[GridPoint]:
        return [GridPoint(1, lam, e, d) for lam, e, d in
                itertools.product(self.lambdas, self.etas, self.deltas)]

    def pair_points(self) -> List[GridPoint]:
        """(alpha1, alpha2) pairs whose sum stays within the largest alpha of the grid.

        Pairs sharing a total order sit next to each other so the left side
        is built once per parameter point.
        """
        top = max(self.alphas)
        pairs = sorted(((a1, a2) for a1 in self.alphas for a2 in self.alphas if a1 + a2 <= top),
                       key=lambda pr: (pr[0] + pr[1], pr[0]))
        return [GridPoint(a1, lam, e, d, alpha2=a2) for lam, e, d, (a1, a2) in
                itertools.product(self.lambdas, self.etas, self.deltas, pairs)]


DEFAULT_GRID = Grid()


# -- sampling ----------------------------------------------------------------------------


def sample_points(count: int) -> List:
    """``count`` distinct rationals: the base seven, then 2, -2, -1/2, -3, 1/3, ..."""
    pts = list(BASE_SAMPLES)
    seen = set(pts)
    k = 2
    while len(pts) < count:
        for c in (Q(k), Q(-k), Q(1, k), Q(-1, k)):
            if c not in seen:
                seen.add(c)
                pts.append(c)
        k += 1
    return pts[:count]


def sample_count(n_max: int) -> int:
    """Points per auxiliary variable: at least the base seven, and more than n_max."""
    return max(len(BASE_SAMPLES), n_max + 1)


OFFSET_SAMPLES = ((Q(1, 2), Q(-1)), (Q(7), Q(-5, 2)))


# -- shared pieces --------------------------------------------------------------------------


def _tables(p: GridPoint, n: int, alpha: Optional[int] = None) -> List[BiPoly]:
    return bell_apostol_table(p.alpha if alpha is None else alpha, p.lam, p.eta, p.delta, n)


def _x2_slice(poly: BiPoly) -> BiPoly:
    """The one-argument form F(y): the X1 = 0 slice, kept as a polynomial in X2."""
    return poly.substitute(x1=0)


def _as_x2(poly_in_x1: BiPoly) -> BiPoly:
    # rename X1 -> X2 for a polynomial in X1 alone
    return BiPoly({(0, i): c for (i, j), c in poly_in_x1.terms.items()})


def _as_x1(poly_in_x2: BiPoly) -> BiPoly:
    return BiPoly({(j, 0): c for (i, j), c in poly_in_x2.terms.items()})


def _binomial_convolution(n: int, left: Sequence, right: Sequence) -> BiPoly:
    """``sum_k C(n, k) left[k] * right[n - k]`` where ``left`` holds scalars or polynomials."""
    if left and not isinstance(left[0], BiPoly):
        return linear_combination((comb(n, k) * left[k], right[n - k]) for k in range(n + 1))
    total = BiPoly()
    for k in range(n + 1):
        total = total + (left[k] * right[n - k]).scale(comb(n, k))
    return total


Check = Iterator[Tuple[int, BiPoly, BiPoly, Optional[str]]]


def _report(theorem_id: str, point: GridPoint, n_max: int,
            check: Callable[[], Check], notes: Sequence[Tuple[str, str]] = ()) -> VerifyReport:
    try:
        for n, lhs, rhs, sample in check():
            if lhs != rhs:
                failure = Failure.of(n, lhs, rhs, sample)
                return VerifyReport(theorem_id, point, n_max, Status.FAIL, failure, tuple(notes))
    except PoleAtZero as exc:
        return VerifyReport(theorem_id, point, n_max, Status.SKIP,
                            notes=tuple(notes) + (("skip", str(exc)),))
    return VerifyReport(theorem_id, point, n_max, Status.PASS, notes=tuple(notes))


def _first_mismatch(check: Callable[[], Check]) -> Optional[int]:
    for n, lhs, rhs, _ in check():
        if lhs != rhs:
            return n
    return None


def _outcome_note(first_bad: Optional[int]) -> str:
    return "pass" if first_bad is None else f"fail at n={first_bad}"


def _skip_if_singular(theorem_id: str, point: GridPoint, n_max: int) -> Optional[VerifyReport]:
    if point.is_singular():
        return VerifyReport(theorem_id, point, n_max, Status.SKIP,
                            notes=(("skip", "pole at t=0: lambda=-1, delta=0, alpha>=1"),))
    return None


# -- correlation formulas ----------------------------------------------------------------------


def _check_3_3(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    F = apostol_type_table(p.alpha, p.lam, p.eta, p.delta, n_max)
    B = bell_classical_table(n_max)
    for n in range(n_max + 1):
        yield n, P[n], _binomial_convolution(n, F, B), None


def _check_3_3_printed(p: GridPoint, n_max: int) -> Check:
    # variant: the one-argument Bell-based factor at X1, i.e. P_k(0, X1)
    P = _tables(p, n_max)
    G = [_as_x1(_x2_slice(q)) for q in P]
    B = bell_classical_table(n_max)
    for n in range(n_max + 1):
        yield n, P[n], _binomial_convolution(n, G, B), None


def verify_thm_3_3(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P_n(X1,X2) = sum_k C(n,k) F_k(X1) Bell_{n-k}(X2), with the plain Apostol-type F_k."""
    skip = _skip_if_singular("3.3", point, n_max)
    if skip:
        return skip
    printed = _first_mismatch(lambda: _check_3_3_printed(point, n_max))
    notes = (("form", "plain Apostol-type F_k(x1)"), ("printed_form", _outcome_note(printed)))
    return _report("3.3", point, n_max, lambda: _check_3_3(point, n_max), notes)


def verify_thm_3_3_printed(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """Variant with the one-argument Bell-based factor P_k(0, X1) in place of F_k(X1); expected to fail."""
    skip = _skip_if_singular("3.3-printed", point, n_max)
    if skip:
        return skip
    return _report("3.3-printed", point, n_max, lambda: _check_3_3_printed(point, n_max),
                   (("form", "variant: one-argument Bell-based factor P_k(0, x1)"),))


def _check_3_4(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    numbers = [f.eval(0, 0) for f in apostol_type_table(p.alpha, p.lam, p.eta, p.delta, n_max)]
    B = bell_bivariate_table(n_max)
    for n in range(n_max + 1):
        yield n, P[n], _binomial_convolution(n, numbers, B), None


def verify_thm_3_4(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P_n(X1,X2) = sum_k C(n,k) F_k(0) Bell_{n-k}(X1,X2)."""
    return _skip_if_singular("3.4", point, n_max) or _report(
        "3.4", point, n_max, lambda: _check_3_4(point, n_max))


def _rhs_3_5(P: List[BiPoly], n: int) -> BiPoly:
    slices = [_x2_slice(q) for q in P[: n + 1]]
    return linear_combination((comb(n, k), slices[k] * X1 ** (n - k)) for k in range(n + 1))


def _check_3_5(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    for n in range(n_max + 1):
        yield n, P[n], _rhs_3_5(P, n), None


def verify_thm_3_5(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P_n(X1,X2) = sum_k C(n,k) P_k(0,X2) X1^(n-k)."""
    return _skip_if_singular("3.5", point, n_max) or _report(
        "3.5", point, n_max, lambda: _check_3_5(point, n_max))


def _check_3_6(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    F = apostol_type_table(p.alpha, p.lam, p.eta, p.delta, n_max)
    B = bell_bivariate_table(n_max)
    for a in sample_points(sample_count(n_max)):
        Fa = [f.eval(a, 0) for f in F]
        for n in range(n_max + 1):
            yield n, P[n].shift_x1(a), _binomial_convolution(n, Fa, B), f"a={format_rational(a)}"


def verify_thm_3_6(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P_n(a+X1, X2) = sum_k C(n,k) F_k(a) Bell_{n-k}(X1,X2), a sampled."""
    notes = (("samples", f"a at {sample_count(n_max)} points"),)
    return _skip_if_singular("3.6", point, n_max) or _report(
        "3.6", point, n_max, lambda: _check_3_6(point, n_max), notes)


# -- implicit summation formulas ----------------------------------------------------------------


Poly4 = Dict[Tuple[int, int, int, int], object]
_VARS4 = ("a", "b", "X1", "X2")


def _render4(p: Poly4) -> str:
    """Text form of a polynomial in a, b, X1, X2 (graded, then lexicographic)."""
    if not p:
        return "0"
    parts = []
    for idx, key in enumerate(sorted(p, key=lambda e: (-sum(e), tuple(-x for x in e)))):
        c = p[key]
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(_VARS4, key) if e)
        mag = -c if c < 0 else c
        body = format_rational(mag) if not mono else (mono if mag == 1 else f"{format_rational(mag)}*{mono}")
        sign = ("-" if c < 0 else "") if idx == 0 else (" - " if c < 0 else " + ")
        parts.append(sign + body)
    return "".join(parts)


def _shifted4(poly: BiPoly) -> Poly4:
    """``poly(a + X1, b + X2)`` expanded in the four variables."""
    out: Poly4 = {}
    for (e1, e2), c in poly.terms.items():
        for i in range(e1 + 1):
            ci = c * comb(e1, i)
            for j in range(e2 + 1):
                out[(i, j, e1 - i, e2 - j)] = ci * comb(e2, j)
    return out


def _convolution4(n: int, left: Sequence[BiPoly], right: Sequence[BiPoly]) -> Poly4:
    """``sum_k C(n,k) left_k(a, b) right_{n-k}(X1, X2)`` in the four variables."""
    out: Poly4 = {}
    get = out.get
    for k in range(n + 1):
        w = comb(n, k)
        rt = right[n - k].terms.items()
        for (i, j), c in left[k].terms.items():
            wc = c * w
            for (p, q), d in rt:
                key = (i, j, p, q)
                s = get(key)
                out[key] = wc * d if s is None else s + wc * d
    return {k: v for k, v in out.items() if v}


class _Rendered:
    """Adapter giving a four-variable dict the comparison and render hooks of a BiPoly."""

    __slots__ = ("terms",)

    def __init__(self, terms: Poly4):
        self.terms = terms

    def __eq__(self, other) -> bool:
        return self.terms == other.terms

    def __ne__(self, other) -> bool:
        return self.terms != other.terms

    def render(self) -> str:
        return _render4(self.terms)

    def to_json(self) -> list:
        keys = sorted(self.terms, key=lambda e: (-sum(e), tuple(-x for x in e)))
        return [{"a": i, "b": j, "e1": p, "e2": q, "c": format_rational(self.terms[(i, j, p, q)])}
                for i, j, p, q in keys]


def _specialize4(p: Poly4, a, b) -> BiPoly:
    """Set ``a`` and ``b`` to rationals, leaving a polynomial in X1, X2."""
    deg = max((max(i, j) for i, j, _, _ in p), default=0)
    apow, bpow = [Q(1)], [Q(1)]
    for _ in range(deg):
        apow.append(apow[-1] * a)
        bpow.append(bpow[-1] * b)
    out: dict = {}
    for (i, j, x, y), c in p.items():
        out[(x, y)] = out.get((x, y), 0) + c * apow[i] * bpow[j]
    return BiPoly(out)


def _check_4_1(p: GridPoint, n_max: int) -> Check:
    a1, a2 = p.alpha, p.alpha2 or 0
    total = _tables(p, n_max, alpha=a1 + a2)
    left = _tables(p, n_max, alpha=a1)
    right = _tables(p, n_max, alpha=a2)
    lhs = [_shifted4(q) for q in total]
    # the expanded left side against the generating function built with offsets
    for a, b in OFFSET_SAMPLES:
        egf = bell_apostol_egf(a1 + a2, p.lam, p.eta, p.delta, n_max, x1_offset=a, x2_offset=b)
        tag = f"offset egf at (a,b)=({format_rational(a)},{format_rational(b)})"
        for n in range(n_max + 1):
            yield n, egf_coeff(egf, n), _specialize4(lhs[n], a, b), tag
    # the identity itself, in all four variables
    for n in range(n_max + 1):
        yield n, _Rendered(lhs[n]), _Rendered(_convolution4(n, left, right)), "symbolic in a, b"


def verify_thm_4_1(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P^(a1+a2)_n(a+X1, b+X2) = sum_k C(n,k) P^(a1)_k(a,b) P^(a2)_{n-k}(X1,X2)."""
    if point.alpha2 is None:
        point = GridPoint(point.alpha, point.lam, point.eta, point.delta, alpha2=0)
    notes = (("form", "symbolic in a, b, X1, X2"),
             ("offset_egf", f"cross-checked at {len(OFFSET_SAMPLES)} (a,b) pairs"))
    return _skip_if_singular("4.1", point, n_max) or _report(
        "4.1", point, n_max, lambda: _check_4_1(point, n_max), notes)


def _check_4_2(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    for n in range(n_max + 1):
        yield n, P[n].shift_x1(1), linear_combination((comb(n, k), P[k]) for k in range(n + 1)), None


def verify_eq_4_2(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P_n(X1+1, X2) = sum_k C(n,k) P_k(X1,X2)."""
    return _skip_if_singular("4.2", point, n_max) or _report(
        "4.2", point, n_max, lambda: _check_4_2(point, n_max))


def _check_4_4(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max + 1)
    for n in range(n_max + 1):
        lhs = P[n + 1].shift_x1(1) - P[n + 1]
        yield n, lhs, linear_combination((comb(n + 1, k), P[k]) for k in range(n + 1)), None


def verify_thm_4_4(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P_{n+1}(X1+1,X2) - P_{n+1}(X1,X2) = sum_{k<=n} C(n+1,k) P_k(X1,X2)."""
    return _skip_if_singular("4.4", point, n_max) or _report(
        "4.4", point, n_max, lambda: _check_4_4(point, n_max))


def _check_4_5(p: GridPoint, n_max: int) -> Check:
    d = p.delta
    P = bell_apostol_table(1, p.lam, p.eta, d, n_max + d)
    B = bell_bivariate_table(n_max)
    scale = Q(2) ** p.eta
    for n in range(n_max + 1):
        m = n + d
        combo = P[m].shift_x1(1).scale(p.lam) + P[m]
        rhs = combo.scale(Q(factorial(n), factorial(m)) / scale)
        yield n, B[n], rhs, None


def verify_thm_4_5(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """Bell_n(X1,X2) = n! (lam P_{n+d}(X1+1,X2) + P_{n+d}(X1,X2)) / (2^eta (n+d)!), order one."""
    point = GridPoint(1, point.lam, point.eta, point.delta)
    return _skip_if_singular("4.5", point, n_max) or _report(
        "4.5", point, n_max, lambda: _check_4_5(point, n_max))


_bracket_cache: Dict[int, BiPoly] = {}


def stirling_bracket(j: int) -> BiPoly:
    """``sum_k (X1)_k S2(j, k)``; equal to X1^j."""
    b = _bracket_cache.get(j)
    if b is None:
        b = linear_combination((stirling2(j, k), falling_factorial(X1, k)) for k in range(j + 1))
        _bracket_cache[j] = b
    return b


def _rhs_4_7(P: List[BiPoly], n: int) -> BiPoly:
    slices = [_x2_slice(q) for q in P[: n + 1]]
    return linear_combination((comb(n, j), stirling_bracket(j) * slices[n - j]) for j in range(n + 1))


def _check_4_7(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    for n in range(n_max + 1):
        yield n, P[n], _rhs_4_7(P, n), None


def _check_4_7_printed(p: GridPoint, n_max: int) -> Check:
    # variant: the Bell-based factor keeps index n inside the j-sum
    P = _tables(p, n_max)
    for n in range(n_max + 1):
        s = _x2_slice(P[n])
        rhs = linear_combination((comb(n, j), stirling_bracket(j) * s) for j in range(n + 1))
        yield n, P[n], rhs, None


def verify_thm_4_7(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """P_n = sum_j C(n,j) [sum_k (X1)_k S2(j,k)] P_{n-j}(0,X2).

    Also records that each bracket collapses to X1^j, that the right side is
    term-identical to the one of 3.5, and how the 4.7-printed variant fares.
    """
    skip = _skip_if_singular("4.7", point, n_max)
    if skip:
        return skip
    P = _tables(point, n_max)
    collapse = all(stirling_bracket(j) == X1 ** j for j in range(n_max + 1))
    same_as_3_5 = all(_rhs_4_7(P, n) == _rhs_3_5(P, n) for n in range(n_max + 1))
    printed = _first_mismatch(lambda: _check_4_7_printed(point, n_max))
    notes = (
        ("form", "P_{n-j}(0,x2) inside the sum"),
        ("bracket_collapse", "x1^j" if collapse else "MISMATCH"),
        ("rhs_matches_3.5", "identical" if same_as_3_5 else "MISMATCH"),
        ("printed_form", _outcome_note(printed)),
    )

    def check():
        if not (collapse and same_as_3_5):
            # surface a coherence break as a failure at n=0
            yield 0, P[0], P[0] + 1, "coherence with 3.5"
        yield from _check_4_7(point, n_max)

    return _report("4.7", point, n_max, check, notes)


def verify_thm_4_7_printed(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    skip = _skip_if_singular("4.7-printed", point, n_max)
    if skip:
        return skip
    return _report("4.7-printed", point, n_max, lambda: _check_4_7_printed(point, n_max),
                   (("form", "variant: P_n(0,x2) inside the sum"),))


# -- derivative formulas ----------------------------------------------------------------------


def _check_5_1(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    for n in range(1, n_max + 1):
        yield n, P[n].partial("X1"), P[n - 1].scale(n), None


def verify_thm_5_1(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """d/dX1 P_n = n P_{n-1}."""
    return _skip_if_singular("5.1", point, n_max) or _report(
        "5.1", point, n_max, lambda: _check_5_1(point, n_max))


def _check_5_3(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    for n in range(n_max + 1):
        yield n, P[n].partial("X2"), P[n].shift_x1(1) - P[n], None


def verify_thm_5_3(point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """d/dX2 P_n = P_n(X1+1,X2) - P_n(X1,X2)."""
    return _skip_if_singular("5.3", point, n_max) or _report(
        "5.3", point, n_max, lambda: _check_5_3(point, n_max))


# -- reductions ---------------------------------------------------------------------------------

_DUAL = {
    "bernoulli": (apostol_bernoulli, apostol_bernoulli_direct),
    "euler": (apostol_euler, apostol_euler_direct),
    "genocchi": (apostol_genocchi, apostol_genocchi_direct),
}

REDUCTION_CHECKS = ("bernoulli", "euler", "genocchi", "remark2", "remark3")


def _check_dual(name: str, p: GridPoint, n_max: int) -> Check:
    via_reduction, direct = _DUAL[name]
    for n in range(n_max + 1):
        yield n, via_reduction(n, p.alpha, p.lam), direct(n, p.alpha, p.lam), None


def _check_remark2(p: GridPoint, n_max: int) -> Check:
    P = bell_apostol_table(0, p.lam, p.eta, p.delta, n_max)
    B = bell_bivariate_table(n_max)
    for n in range(n_max + 1):
        yield n, P[n], B[n], None


def _check_remark3(p: GridPoint, n_max: int) -> Check:
    P = _tables(p, n_max)
    F = apostol_type_table(p.alpha, p.lam, p.eta, p.delta, n_max)
    for n in range(n_max + 1):
        yield n, P[n].substitute(x2=0), F[n], None


def verify_reduction(check: str, point: GridPoint, n_max: int = DEFAULT_NMAX) -> VerifyReport:
    """Dual-construction check of a Bernoulli/Euler/Genocchi reduction, or of the alpha=0 / X2=0 degenerations."""
    tid = f"reduction:{check}"
    if check in _DUAL:
        via_reduction = _DUAL[check][0]
        try:
            row0 = via_reduction(0, point.alpha, point.lam).render()
        except PoleAtZero as exc:
            return VerifyReport(tid, point, n_max, Status.SKIP, notes=(("skip", str(exc)),))
        return _report(tid, point, n_max, lambda: _check_dual(check, point, n_max),
                       (("row_0", row0),))
    if check == "remark2":
        return _report(tid, point, n_max, lambda: _check_remark2(point, n_max))
    if check == "remark3":
        return _skip_if_singular(tid, point, n_max) or _report(
            tid, point, n_max, lambda: _check_remark3(point, n_max))
    raise ValueError(f"unknown reduction check {check!r}; expected one of {REDUCTION_CHECKS}")


def reduction_points(check: str, grid: Grid = DEFAULT_GRID) -> List[GridPoint]:
    if check in _DUAL:
        return [GridPoint(a, lam, 0, 0) for a in grid.alphas for lam in grid.lambdas]
    if check == "remark2":
        return [GridPoint(0, lam, e, d) for lam in grid.lambdas for e in grid.etas for d in grid.deltas]
    return grid.points()


# -- driver ------------------------------------------------------------------------------------

VERIFIERS: Dict[str, Callable[[GridPoint, int], VerifyReport]] = {
    "3.3": verify_thm_3_3,
    "3.4": verify_thm_3_4,
    "3.5": verify_thm_3_5,
    "3.6": verify_thm_3_6,
    "4.1": verify_thm_4_1,
    "4.2": verify_eq_4_2,
    "4.4": verify_thm_4_4,
    "4.5": verify_thm_4_5,
    "4.7": verify_thm_4_7,
    "5.1": verify_thm_5_1,
    "5.3": verify_thm_5_3,
    "3.3-printed": verify_thm_3_3_printed,
    "4.7-printed": verify_thm_4_7_printed,
}

MAIN_THEOREMS = ("3.3", "3.4", "3.5", "3.6", "4.1", "4.2", "4.4", "4.5", "4.7", "5.1", "5.3")
PRINTED_FORMS = ("3.3-printed", "4.7-printed")
THEOREM_IDS = MAIN_THEOREMS + PRINTED_FORMS + ("reductions",)


def theorem_points(theorem_id: str, grid: Grid = DEFAULT_GRID) -> List[GridPoint]:
    if theorem_id == "4.5":
        return grid.order_one_points()
    if theorem_id == "4.1":
        return grid.pair_points()
    return grid.points()


def expand_theorems(selection: str) -> List[str]:
    """``"all"`` -> every proved identity plus the reductions; otherwise one id."""
    if selection == "all":
        return list(MAIN_THEOREMS) + ["reductions"]
    if selection not in THEOREM_IDS:
        raise ValueError(f"unknown theorem {selection!r}; expected one of {THEOREM_IDS + ('all',)}")
    return [selection]


def run_suite(theorems: Sequence[str] = MAIN_THEOREMS, grid: Grid = DEFAULT_GRID,
              n_max: int = DEFAULT_NMAX) -> List[VerifyReport]:
    """Every requested verifier over every grid point, in a fixed order.

    Singular points (lambda=-1, delta=0, alpha>=1) come back as SKIP reports.
    """
    reports: List[VerifyReport] = []
    for tid in theorems:
        if tid == "reductions":
            for check in REDUCTION_CHECKS:
                reports.extend(verify_reduction(check, p, n_max) for p in reduction_points(check, grid))
            continue
        verifier = VERIFIERS[tid]
        reports.extend(verifier(p, n_max) for p in theorem_points(tid, grid))
    return reports


def summarize(reports: Sequence[VerifyReport]) -> Dict[str, int]:
    out = {s.value: 0 for s in Status}
    for r in reports:
        out[r.status.value] += 1
    return out

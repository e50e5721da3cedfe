"""Polynomial families built from their exponential generating functions.

Every family is realised the same way: build one truncated series, then read
off ``n! [t^n]``.  The Apostol factor ``(2^eta t^delta / (lam e^t + 1))^alpha``
is computed over Q and only then lifted into Q[X1, X2], so the expensive
convolutions stay scalar.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .backend import ONE, Q, format_rational, to_q
from .errors import ParameterError, PoleAtZero
from .poly import POLY_RING, X1, X2, BiPoly, lift
from .series import QQ, LaurentSeries, egf_coeff


class FamilyKind(enum.Enum):
    BELL_BIVARIATE = "bell-bivariate"
    BELL_CLASSICAL = "bell-classical"
    BELL_NUMBER = "bell-number"
    EULER = "euler"
    BERNOULLI = "bernoulli"
    GENOCCHI = "genocchi"
    APOSTOL_EULER = "apostol-euler"
    APOSTOL_BERNOULLI = "apostol-bernoulli"
    APOSTOL_GENOCCHI = "apostol-genocchi"
    APOSTOL_TYPE = "apostol-type"
    BELL_APOSTOL = "bell-apostol"
    BELL_APOSTOL_NUMBER = "bell-apostol-number"


# parameters each family actually reads; everything else sits at NEUTRAL
_RELEVANT = {
    FamilyKind.BELL_BIVARIATE: (),
    FamilyKind.BELL_CLASSICAL: (),
    FamilyKind.BELL_NUMBER: (),
    FamilyKind.EULER: ("alpha",),
    FamilyKind.BERNOULLI: ("alpha",),
    FamilyKind.GENOCCHI: ("alpha",),
    FamilyKind.APOSTOL_EULER: ("alpha", "lam"),
    FamilyKind.APOSTOL_BERNOULLI: ("alpha", "lam"),
    FamilyKind.APOSTOL_GENOCCHI: ("alpha", "lam"),
    FamilyKind.APOSTOL_TYPE: ("alpha", "lam", "eta", "delta"),
    FamilyKind.BELL_APOSTOL: ("alpha", "lam", "eta", "delta"),
    FamilyKind.BELL_APOSTOL_NUMBER: ("alpha", "lam", "eta", "delta"),
}

NEUTRAL = {"alpha": 1, "lam": ONE, "eta": 0, "delta": 0}


def check_parameters(alpha: int, lam, eta: int, delta: int) -> None:
    """Raise ParameterError / PoleAtZero for values outside the supported domain."""
    if not isinstance(alpha, int) or alpha < 0:
        raise ParameterError(f"alpha must be a nonnegative integer, got {alpha!r}")
    if not isinstance(delta, int) or delta < 0:
        raise ParameterError(f"delta must be a nonnegative integer, got {delta!r}")
    if not isinstance(eta, int):
        raise ParameterError(f"eta must be an integer, got {eta!r}")
    if lam == -1 and delta == 0 and alpha >= 1:
        raise PoleAtZero("pole at t=0: lambda=-1 with delta=0 and alpha>=1")


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    alpha: int = 1
    lam: object = ONE
    eta: int = 0
    delta: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lam", to_q(self.lam))
        relevant = _RELEVANT[self.kind]
        for name, neutral in NEUTRAL.items():
            if name not in relevant and getattr(self, name) != neutral:
                label = "lambda" if name == "lam" else name
                raise ParameterError(
                    f"{self.kind.value} does not use {label}; it must stay at {neutral}")
        if "delta" in relevant:
            check_parameters(self.alpha, self.lam, self.eta, self.delta)
        elif not isinstance(self.alpha, int) or self.alpha < 0:
            # Euler-type poles only surface when the series is built
            raise ParameterError(f"alpha must be a nonnegative integer, got {self.alpha!r}")

    @classmethod
    def for_kind(cls, kind: FamilyKind, **params) -> "FamilySpec":
        """Build a spec, silently resetting parameters ``kind`` does not use."""
        relevant = _RELEVANT[kind]
        return cls(kind, **{k: v for k, v in params.items() if k in relevant})

    def to_json(self) -> dict:
        return {"family": self.kind.value, "alpha": self.alpha,
                "lambda": format_rational(self.lam), "eta": self.eta, "delta": self.delta}


@dataclass(frozen=True)
class PolyTable:
    spec: FamilySpec
    rows: Tuple[Tuple[int, BiPoly], ...]

    def values(self) -> List[BiPoly]:
        return [v for _, v in self.rows]


# -- generating functions -----------------------------------------------------------


@lru_cache(maxsize=4096)
def apostol_base(alpha: int, lam, eta: int, delta: int, order: int) -> LaurentSeries:
    """``(2^eta t^delta / (lam e^t + 1))^alpha`` over Q, known to ``order``.

    For lam = -1 the denominator has valuation 1; with delta >= 1 the
    ``t^delta`` factor cancels it and the result is still a power series.
    """
    lam = to_q(lam)
    check_parameters(alpha, lam, eta, delta)
    if alpha == 0:
        return LaurentSeries(QQ, 0, [ONE], order)
    v = 1 if lam == -1 else 0
    work = order + v * (alpha + 1)
    denom = LaurentSeries.exponential(ONE, work).scale(lam) + 1
    factor = denom.inverse().shift(delta).scale(Q(2) ** eta)
    out = factor ** alpha
    assert out.order >= order
    return out.truncate(order)


def _bell_inner(order: int, with_x1: bool) -> LaurentSeries:
    # X1 t + X2 (e^t - 1)
    coeffs = [POLY_RING.zero]
    fact = ONE
    for k in range(1, order + 1):
        fact = fact * k
        c = X2.scale(ONE / fact)
        if k == 1 and with_x1:
            c = c + X1
        coeffs.append(c)
    return LaurentSeries(POLY_RING, 0, coeffs, order)


_series_cache: Dict[str, LaurentSeries] = {}


def _cached_series(name: str, order: int, build) -> LaurentSeries:
    s = _series_cache.get(name)
    if s is None or s.order < order:
        s = build(order)
        _series_cache[name] = s
    return s.truncate(order)


def bell_bivariate_egf(order: int) -> LaurentSeries:
    """``exp(X1 t + X2 (e^t - 1))``."""
    return _cached_series("bell2", order, lambda n: _bell_inner(n, True).exp())


def bell_classical_egf(order: int) -> LaurentSeries:
    """``exp(X2 (e^t - 1))``."""
    return _cached_series("bell1", order, lambda n: _bell_inner(n, False).exp())


def bell_number_egf(order: int) -> LaurentSeries:
    """``exp(e^t - 1)`` over Q."""
    return _cached_series("bell0", order, lambda n: (LaurentSeries.exponential(ONE, n) - 1).exp())


def _lift(s: LaurentSeries) -> LaurentSeries:
    return s.map_coefficients(lift, POLY_RING)


def _offset_exponential(a, b, order: int) -> LaurentSeries:
    """``exp(a t + b (e^t - 1))`` over Q for rational a, b."""
    a, b = to_q(a), to_q(b)
    inner = (LaurentSeries.exponential(ONE, order) - 1).scale(b) + LaurentSeries.monomial(1, QQ, a)
    return inner.truncate(order).exp()


def bell_apostol_egf(alpha: int, lam, eta: int, delta: int, order: int,
                     x1_offset=0, x2_offset=0) -> LaurentSeries:
    """Generating function of the Bell-based Apostol-type polynomials.

    With offsets ``a, b`` this is the EGF of the polynomials evaluated at
    ``(a + X1, b + X2)``; the offset part is folded into the scalar factor.
    """
    base = apostol_base(alpha, to_q(lam), eta, delta, order)
    if x1_offset or x2_offset:
        base = (base * _offset_exponential(x1_offset, x2_offset, order)).truncate(order)
    return (_lift(base) * bell_bivariate_egf(order)).truncate(order)


def apostol_type_egf(alpha: int, lam, eta: int, delta: int, order: int) -> LaurentSeries:
    """``(2^eta t^delta / (lam e^t + 1))^alpha exp(X1 t)``."""
    base = apostol_base(alpha, to_q(lam), eta, delta, order)
    return (_lift(base) * LaurentSeries.exponential(X1, order, POLY_RING)).truncate(order)


def bell_apostol_number_egf(alpha: int, lam, eta: int, delta: int, order: int) -> LaurentSeries:
    """Scalar EGF ``(2^eta t^delta / (lam e^t + 1))^alpha exp(e^t - 1)``."""
    base = apostol_base(alpha, to_q(lam), eta, delta, order)
    return (base * bell_number_egf(order)).truncate(order)


# independent constructions of the classical Apostol families, kept for cross-checks

def _ratio_power(numerator: LaurentSeries, lam, sign: int, alpha: int, order: int) -> LaurentSeries:
    # (numerator / (lam e^t + sign))^alpha, with enough working precision
    if alpha == 0:
        return LaurentSeries.exponential(X1, order, POLY_RING)
    v = 1 if lam * 1 + sign == 0 else 0
    work = order + 2 * v * (alpha + 1)
    denom = LaurentSeries.exponential(ONE, work).scale(lam) + sign
    ratio = (numerator * denom.inverse())
    if not ratio.is_zero and ratio.valuation < 0:
        raise PoleAtZero("pole at t=0")
    return _lift((ratio ** alpha).truncate(order)) * LaurentSeries.exponential(X1, order, POLY_RING)


def apostol_bernoulli_direct_egf(alpha: int, lam, order: int) -> LaurentSeries:
    """``exp(X1 t) (t / (lam e^t - 1))^alpha``."""
    return _ratio_power(LaurentSeries.monomial(1), to_q(lam), -1, alpha, order).truncate(order)


def apostol_euler_direct_egf(alpha: int, lam, order: int) -> LaurentSeries:
    """``exp(X1 t) (2 / (lam e^t + 1))^alpha``."""
    return _ratio_power(LaurentSeries.constant(Q(2)), to_q(lam), 1, alpha, order).truncate(order)


def apostol_genocchi_direct_egf(alpha: int, lam, order: int) -> LaurentSeries:
    """``exp(X1 t) (2 t / (lam e^t + 1))^alpha``."""
    return _ratio_power(LaurentSeries.monomial(1, QQ, Q(2)), to_q(lam), 1, alpha, order).truncate(order)


def family_egf(spec: FamilySpec, order: int) -> LaurentSeries:
    """The generating function of ``spec`` over Q[X1, X2]."""
    k, a, lam = spec.kind, spec.alpha, spec.lam
    if k is FamilyKind.BELL_BIVARIATE:
        return bell_bivariate_egf(order)
    if k is FamilyKind.BELL_CLASSICAL:
        return bell_classical_egf(order)
    if k is FamilyKind.BELL_NUMBER:
        return _lift(bell_number_egf(order))
    if k is FamilyKind.BELL_APOSTOL:
        return bell_apostol_egf(a, lam, spec.eta, spec.delta, order)
    if k is FamilyKind.BELL_APOSTOL_NUMBER:
        return _lift(bell_apostol_number_egf(a, lam, spec.eta, spec.delta, order))
    if k is FamilyKind.APOSTOL_TYPE:
        return apostol_type_egf(a, lam, spec.eta, spec.delta, order)
    if k in (FamilyKind.BERNOULLI, FamilyKind.APOSTOL_BERNOULLI):
        # B(x; lam) = (-1)^alpha F(x; -lam; 0, 1)
        return apostol_type_egf(a, -lam, 0, 1, order).scale(Q((-1) ** a))
    if k in (FamilyKind.EULER, FamilyKind.APOSTOL_EULER):
        return apostol_type_egf(a, lam, 1, 0, order)
    if k in (FamilyKind.GENOCCHI, FamilyKind.APOSTOL_GENOCCHI):
        return apostol_type_egf(a, lam, 1, 1, order)
    raise ParameterError(f"unknown family {k!r}")


# -- coefficient tables -------------------------------------------------------------

_row_cache: Dict[FamilySpec, List[BiPoly]] = {}


def _rows(spec: FamilySpec, n_max: int) -> List[BiPoly]:
    rows = _row_cache.get(spec)
    if rows is None or len(rows) <= n_max:
        egf = family_egf(spec, n_max)
        rows = [egf_coeff(egf, n) for n in range(n_max + 1)]
        _row_cache[spec] = rows
    return rows[: n_max + 1]


def build_table(spec: FamilySpec, n_max: int) -> PolyTable:
    """Rows n = 0..n_max from a single series construction at order n_max."""
    if n_max < 0:
        raise ParameterError("n_max must be >= 0")
    return PolyTable(spec, tuple(enumerate(_rows(spec, n_max))))


def clear_caches() -> None:
    _row_cache.clear()
    _series_cache.clear()
    apostol_base.cache_clear()


def _spec(kind: FamilyKind, **params) -> FamilySpec:
    return FamilySpec.for_kind(kind, **params)


def bell_apostol_table(alpha: int, lam, eta: int, delta: int, n_max: int) -> List[BiPoly]:
    return _rows(_spec(FamilyKind.BELL_APOSTOL, alpha=alpha, lam=lam, eta=eta, delta=delta), n_max)


def apostol_type_table(alpha: int, lam, eta: int, delta: int, n_max: int) -> List[BiPoly]:
    return _rows(_spec(FamilyKind.APOSTOL_TYPE, alpha=alpha, lam=lam, eta=eta, delta=delta), n_max)


def bell_bivariate_table(n_max: int) -> List[BiPoly]:
    return _rows(FamilySpec(FamilyKind.BELL_BIVARIATE), n_max)


def bell_classical_table(n_max: int) -> List[BiPoly]:
    return _rows(FamilySpec(FamilyKind.BELL_CLASSICAL), n_max)


# -- single members ---------------------------------------------------------------------


def bell_apostol_poly(n: int, alpha: int, lam, eta: int, delta: int) -> BiPoly:
    return bell_apostol_table(alpha, lam, eta, delta, n)[n]


def bell_apostol_number(n: int, alpha: int, lam, eta: int, delta: int):
    """The polynomial at X1 = 0, X2 = 1."""
    return bell_apostol_poly(n, alpha, lam, eta, delta).eval(0, 1)


def bell_bivariate(n: int) -> BiPoly:
    return bell_bivariate_table(n)[n]


def bell_classical(n: int) -> BiPoly:
    return bell_classical_table(n)[n]


def bell_number(n: int):
    return egf_coeff(bell_number_egf(n), n)


def apostol_type_poly(n: int, alpha: int, lam, eta: int, delta: int) -> BiPoly:
    return apostol_type_table(alpha, lam, eta, delta, n)[n]


def apostol_bernoulli(n: int, alpha: int, lam) -> BiPoly:
    return _rows(_spec(FamilyKind.APOSTOL_BERNOULLI, alpha=alpha, lam=lam), n)[n]


def apostol_euler(n: int, alpha: int, lam) -> BiPoly:
    return _rows(_spec(FamilyKind.APOSTOL_EULER, alpha=alpha, lam=lam), n)[n]


def apostol_genocchi(n: int, alpha: int, lam) -> BiPoly:
    return _rows(_spec(FamilyKind.APOSTOL_GENOCCHI, alpha=alpha, lam=lam), n)[n]


def apostol_bernoulli_direct(n: int, alpha: int, lam) -> BiPoly:
    return egf_coeff(apostol_bernoulli_direct_egf(alpha, lam, n), n)


def apostol_euler_direct(n: int, alpha: int, lam) -> BiPoly:
    return egf_coeff(apostol_euler_direct_egf(alpha, lam, n), n)


def apostol_genocchi_direct(n: int, alpha: int, lam) -> BiPoly:
    return egf_coeff(apostol_genocchi_direct_egf(alpha, lam, n), n)


_CLASSICAL = {
    "euler": FamilyKind.EULER,
    "bernoulli": FamilyKind.BERNOULLI,
    "genocchi": FamilyKind.GENOCCHI,
}


def classical_order_family(kind: str, n: int, alpha: int) -> BiPoly:
    """Euler / Bernoulli / Genocchi polynomials of order alpha (lambda = 1).

    The corresponding numbers are the values at X1 = 0.
    """
    try:
        fk = _CLASSICAL[kind.lower()]
    except KeyError:
        raise ParameterError(f"kind must be one of {sorted(_CLASSICAL)}, got {kind!r}") from None
    return _rows(FamilySpec(fk, alpha=alpha), n)[n]

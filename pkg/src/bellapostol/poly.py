"""Sparse polynomials in Q[X1, X2].

A :class:`BiPoly` maps exponent pairs ``(e1, e2)`` to nonzero rationals.
Values are immutable; every operation returns a new, canonical polynomial,
so ``==`` is plain term-by-term comparison.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, Mapping, Tuple

from .backend import ONE, Q, format_rational, to_q
from .series import Ring

Exponent = Tuple[int, int]


class BiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for (e1, e2), c in items:
            if e1 < 0 or e2 < 0:
                raise ValueError(f"negative exponent {(e1, e2)}")
            c = to_q(c)
            key = (int(e1), int(e2))
            s = clean.get(key)
            clean[key] = c if s is None else s + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        # caller guarantees: Q coefficients, no zeros
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "BiPoly":
        c = to_q(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, e1: int, e2: int, c=ONE) -> "BiPoly":
        return cls({(e1, e2): c})

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, object]:
        return self._terms

    def coefficient(self, e1: int, e2: int):
        return self._terms.get((e1, e2), Q(0))

    def is_constant(self) -> bool:
        t = self._terms
        return not t or (len(t) == 1 and (0, 0) in t)

    def constant_term(self):
        return self._terms.get((0, 0), Q(0))

    def degree_x1(self) -> int:
        """-1 for the zero polynomial."""
        return max((e1 for e1, _ in self._terms), default=-1)

    def degree_x2(self) -> int:
        return max((e2 for _, e2 in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((e1 + e2 for e1, e2 in self._terms), default=-1)

    def sorted_terms(self) -> list:
        """Terms in descending graded-lexicographic order (X1 > X2)."""
        return sorted(self._terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        try:
            c = to_q(other)
        except (TypeError, AttributeError):
            return NotImplemented
        return self._terms == ({(0, 0): c} if c else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations ---------------------------------------------------------

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -v for k, v in self._terms.items()})

    def __add__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, v in b.items():
            s = out.get(k)
            if s is None:
                out[k] = v
            else:
                s = s + v
                if s:
                    out[k] = s
                else:
                    del out[k]
        return BiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return self.scale(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return BiPoly._raw({})
        if len(b) == 1 and (0, 0) in b:
            return self.scale(b[(0, 0)])
        if len(a) == 1 and (0, 0) in a:
            return other.scale(a[(0, 0)])
        out: dict = {}
        get = out.get
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                k = (i1 + i2, j1 + j2)
                s = get(k)
                out[k] = c1 * c2 if s is None else s + c1 * c2
        return BiPoly._raw({k: v for k, v in out.items() if v})

    def __rmul__(self, other) -> "BiPoly":
        return self.scale(other)

    def scale(self, c) -> "BiPoly":
        c = to_q(c)
        if not c:
            return BiPoly._raw({})
        if c == 1:
            return self
        return BiPoly._raw({k: v * c for k, v in self._terms.items()})

    def __truediv__(self, c) -> "BiPoly":
        return self.scale(ONE / to_q(c))

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE_POLY
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert_constant(self) -> "BiPoly":
        """Inverse of a nonzero constant; the only units of Q[X1, X2]."""
        if not self.is_constant() or not self._terms:
            raise ZeroDivisionError("only nonzero constants are invertible in Q[X1, X2]")
        return BiPoly.constant(ONE / self._terms[(0, 0)])

    # -- substitution and calculus ---------------------------------------------------

    def eval(self, a, b):
        """Exact value at ``X1 = a, X2 = b``."""
        a, b = to_q(a), to_q(b)
        apow = _powers(a, self.degree_x1())
        bpow = _powers(b, self.degree_x2())
        total = Q(0)
        for (i, j), c in self._terms.items():
            total += c * apow[i] * bpow[j]
        return total

    def substitute(self, x1=None, x2=None) -> "BiPoly":
        """Replace ``X1`` and/or ``X2`` by a rational value, keeping the other symbolic."""
        if x1 is None and x2 is None:
            return self
        apow = _powers(to_q(x1), self.degree_x1()) if x1 is not None else None
        bpow = _powers(to_q(x2), self.degree_x2()) if x2 is not None else None
        out: dict = {}
        for (i, j), c in self._terms.items():
            if apow is not None:
                c = c * apow[i]
                i = 0
            if bpow is not None:
                c = c * bpow[j]
                j = 0
            k = (i, j)
            out[k] = out.get(k, 0) + c
        return BiPoly._raw({k: v for k, v in out.items() if v})

    def shift_x1(self, c) -> "BiPoly":
        """``p(X1 + c, X2)``, expanded binomially."""
        return self._shift(to_q(c), 0)

    def shift_x2(self, c) -> "BiPoly":
        """``p(X1, X2 + c)``."""
        return self._shift(to_q(c), 1)

    def _shift(self, c, axis: int) -> "BiPoly":
        if not c:
            return self
        cpow = _powers(c, self.degree_x1() if axis == 0 else self.degree_x2())
        out: dict = {}
        get = out.get
        for (i, j), v in self._terms.items():
            e = (i, j)[axis]
            for p in range(e + 1):
                w = v * (comb(e, p) * cpow[e - p])
                k = (p, j) if axis == 0 else (i, p)
                s = get(k)
                out[k] = w if s is None else s + w
        return BiPoly._raw({k: v for k, v in out.items() if v})

    def partial(self, var: str) -> "BiPoly":
        """Formal partial derivative; ``var`` is ``"X1"`` or ``"X2"``."""
        if var not in ("X1", "X2"):
            raise ValueError(f"unknown variable {var!r}")
        axis = 0 if var == "X1" else 1
        out = {}
        for (i, j), c in self._terms.items():
            e = (i, j)[axis]
            if e:
                out[(i - 1, j) if axis == 0 else (i, j - 1)] = c * e
        return BiPoly._raw(out)

    # -- rendering ---------------------------------------------------------------

    def render(self) -> str:
        """Canonical text: graded-lex terms, exact ``p/q`` coefficients.

        >>> str((X1 + X2) ** 2 + X2)
        'X1^2 + 2*X1*X2 + X2^2 + X2'
        """
        if not self._terms:
            return "0"
        parts = []
        for idx, ((e1, e2), c) in enumerate(self.sorted_terms()):
            mono = _monomial_text(e1, e2, "X1", "X2", "^", "*")
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def render_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, ((e1, e2), c) in enumerate(self.sorted_terms()):
            mono = _monomial_text(e1, e2, "x_{1}", "x_{2}", "^", " ", brace=True)
            neg = c < 0
            mag = -c if neg else c
            num, den = int(mag.numerator), int(mag.denominator)
            coef = str(num) if den == 1 else rf"\frac{{{num}}}{{{den}}}"
            if not mono:
                body = coef
            elif mag == 1:
                body = mono
            else:
                body = f"{coef} {mono}"
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def to_json(self) -> list:
        return [{"e1": e1, "e2": e2, "c": format_rational(c)}
                for (e1, e2), c in self.sorted_terms()]

    __str__ = render

    def __repr__(self) -> str:
        return f"BiPoly({self.render()})"


def _powers(x, n: int) -> list:
    out = [ONE]
    for _ in range(max(n, 0)):
        out.append(out[-1] * x)
    return out


def _monomial_text(e1, e2, n1, n2, caret, sep, brace=False) -> str:
    def one(name, e):
        if e == 0:
            return ""
        if e == 1:
            return name
        return f"{name}{caret}{{{e}}}" if brace else f"{name}{caret}{e}"

    return sep.join(s for s in (one(n1, e1), one(n2, e2)) if s)


ZERO_POLY = BiPoly._raw({})
ONE_POLY = BiPoly._raw({(0, 0): ONE})
X1 = BiPoly._raw({(1, 0): ONE})
X2 = BiPoly._raw({(0, 1): ONE})

POLY_RING = Ring("QQ[X1,X2]", ZERO_POLY, ONE_POLY, BiPoly.invert_constant)


def lift(c) -> BiPoly:
    """Embed a rational as a constant polynomial."""
    return BiPoly.constant(c)


def poly_add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def poly_mul(p: BiPoly, q: BiPoly) -> BiPoly:
    return p * q


def poly_scale(p: BiPoly, c) -> BiPoly:
    return p.scale(c)


def poly_eval(p: BiPoly, a, b):
    return p.eval(a, b)


def poly_shift_x1(p: BiPoly, c) -> BiPoly:
    return p.shift_x1(c)


def poly_partial(p: BiPoly, var: str) -> BiPoly:
    return p.partial(var)


def evaluate_all(polys: Iterable[BiPoly], a, b) -> list:
    """Values of several polynomials at one point, sharing the power tables."""
    polys = list(polys)
    a, b = to_q(a), to_q(b)
    d1 = max((p.degree_x1() for p in polys), default=0)
    d2 = max((p.degree_x2() for p in polys), default=0)
    apow, bpow = _powers(a, d1), _powers(b, d2)
    out = []
    for p in polys:
        total = Q(0)
        for (i, j), c in p._terms.items():
            total += c * apow[i] * bpow[j]
        out.append(total)
    return out


def linear_combination(pairs: Iterable) -> BiPoly:
    """``sum w_i p_i`` for ``(w_i, p_i)`` pairs, accumulated in one dict."""
    out: dict = {}
    get = out.get
    for w, p in pairs:
        w = to_q(w)
        if not w:
            continue
        for k, v in p._terms.items():
            s = get(k)
            out[k] = v * w if s is None else s + v * w
    return BiPoly._raw({k: v for k, v in out.items() if v})

"""Truncated formal Laurent series over a pluggable coefficient ring.

A series is ``sum_{k >= v} c_k t^k`` known exactly for ``k <= order``;
coefficients past ``order`` are *unknown*, not zero.  ``order`` may be
``math.inf`` for an exact finite expansion such as ``t`` or ``1 - t``.

Every operation returns the largest order its inputs can guarantee:

    add   min(Na, Nb)
    mul   min(Na + vb, Nb + va)
    inv   N - 2v
    exp   N
    diff  N - 1
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .backend import ONE, ZERO, Q
from .errors import NegativeValuation, OrderExceeded, PositiveValuationRequired

INF = math.inf


@dataclass(frozen=True)
class Ring:
    """What a coefficient ring must provide beyond ``+ - *`` and ``==``.

    ``invert`` returns the multiplicative inverse of a unit or raises
    ZeroDivisionError.  Elements must also accept multiplication by a
    backend rational.
    """

    name: str
    zero: Any
    one: Any
    invert: Callable[[Any], Any]


QQ = Ring("QQ", ZERO, ONE, lambda x: ONE / x)


class LaurentSeries:
    __slots__ = ("ring", "valuation", "coeffs", "order")

    def __init__(self, ring: Ring, valuation: int, coeffs: Iterable, order=INF):
        cs = list(coeffs)
        if order != INF:
            keep = order - valuation + 1
            if keep <= 0:
                cs = []
            elif len(cs) > keep:
                del cs[keep:]
            elif len(cs) < keep:
                cs.extend([ring.zero] * (keep - len(cs)))
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        if start == len(cs):
            cs = []
            valuation = order + 1 if order != INF else INF
        else:
            valuation += start
            cs = cs[start:]
            if order == INF:
                end = len(cs)
                while not cs[end - 1]:
                    end -= 1
                del cs[end:]
        self.ring = ring
        self.valuation = valuation
        self.coeffs = tuple(cs)
        self.order = order

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coefficients(cls, coeffs: Sequence, ring: Ring = QQ, valuation: int = 0, order=None):
        """Series whose t^valuation, t^(valuation+1), ... coefficients are ``coeffs``.

        With ``order=None`` the expansion is exact (order infinity).
        """
        return cls(ring, valuation, coeffs, INF if order is None else order)

    @classmethod
    def constant(cls, c, ring: Ring = QQ):
        return cls(ring, 0, [c])

    @classmethod
    def monomial(cls, k: int, ring: Ring = QQ, c=None):
        """Exact ``c * t**k`` (``c`` defaults to the ring's one)."""
        return cls(ring, k, [ring.one if c is None else c])

    @classmethod
    def zero_series(cls, ring: Ring = QQ, order=INF):
        return cls(ring, 0, [], order)

    @classmethod
    def exponential(cls, c, order: int, ring: Ring = QQ):
        """``exp(c t)`` to ``order``: coefficients ``c**k / k!``."""
        out = [ring.one]
        for k in range(1, order + 1):
            out.append(out[-1] * c * Q(1, k))
        return cls(ring, 0, out, order)

    # -- basic queries --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int):
        if k > self.order:
            raise OrderExceeded(f"coefficient of t^{k} requested, series known to t^{self.order}")
        if self.is_zero or k < self.valuation or k - self.valuation >= len(self.coeffs):
            return self.ring.zero
        return self.coeffs[k - self.valuation]

    def __getitem__(self, k: int):
        return self.coefficient(k)

    def _top(self) -> int:
        """Highest index that has to be materialised."""
        if self.order != INF:
            return self.order
        return self.valuation + len(self.coeffs) - 1

    def truncate(self, order: int) -> "LaurentSeries":
        if order >= self.order:
            return self
        return LaurentSeries(self.ring, self.valuation if not self.is_zero else 0,
                             self.coeffs, order)

    def agrees_with(self, other: "LaurentSeries") -> bool:
        """Coefficient-wise equality up to the smaller of the two orders."""
        n = min(self.order, other.order)
        if n == INF:
            return self.valuation == other.valuation and self.coeffs == other.coeffs
        lo = min(self.valuation, other.valuation, n + 1)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(lo, n + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.order == other.order and self.valuation == other.valuation
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_zero:
            body = "0"
        else:
            body = " + ".join(f"({c})*t^{self.valuation + i}"
                              for i, c in enumerate(self.coeffs) if c)
        tail = "" if self.order == INF else f" + O(t^{self.order + 1})"
        return f"LaurentSeries[{self.ring.name}]({body}{tail})"

    # -- arithmetic -------------------------------------------------------------

    def __neg__(self):
        return LaurentSeries(self.ring, self.valuation if not self.is_zero else 0,
                             [-c for c in self.coeffs], self.order)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.constant(self.ring.one * other, self.ring)
        order = min(self.order, other.order)
        if self.is_zero:
            return other.truncate(order)
        if other.is_zero:
            return self.truncate(order)
        lo = min(self.valuation, other.valuation)
        hi = order if order != INF else max(self._top(), other._top())
        if hi < lo:
            return LaurentSeries.zero_series(self.ring, order)
        zero = self.ring.zero
        out = []
        for k in range(lo, hi + 1):
            i, j = k - self.valuation, k - other.valuation
            a = self.coeffs[i] if 0 <= i < len(self.coeffs) else None
            b = other.coeffs[j] if 0 <= j < len(other.coeffs) else None
            if a is None:
                out.append(zero if b is None else b)
            else:
                out.append(a if b is None else a + b)
        return LaurentSeries(self.ring, lo, out, order)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.constant(self.ring.one * other, self.ring)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        """Multiply every coefficient by the scalar or ring element ``c``."""
        return LaurentSeries(self.ring, self.valuation if not self.is_zero else 0,
                             [x * c for x in self.coeffs], self.order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by ``t**k`` (``k`` may be negative)."""
        if self.is_zero:
            return LaurentSeries.zero_series(self.ring, self.order + k)
        return LaurentSeries(self.ring, self.valuation + k, self.coeffs, self.order + k)

    def __pow__(self, alpha: int):
        return series_pow(self, alpha)

    def inverse(self, order=None):
        return series_inv(self, order)

    def exp(self, order=None):
        return series_exp(self, order)

    def derivative(self) -> "LaurentSeries":
        """Formal d/dt."""
        if self.is_zero:
            return LaurentSeries.zero_series(self.ring, self.order - 1)
        v = self.valuation
        out = [c * (v + i) for i, c in enumerate(self.coeffs)]
        return LaurentSeries(self.ring, v - 1, out, self.order - 1)

    def map_coefficients(self, f: Callable, ring: Ring) -> "LaurentSeries":
        """Apply ``f`` coefficient-wise, landing in ``ring`` (e.g. lift QQ into polynomials)."""
        if self.is_zero:
            return LaurentSeries.zero_series(ring, self.order)
        return LaurentSeries(ring, self.valuation, [f(c) for c in self.coeffs], self.order)


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def series_scale(a: LaurentSeries, c) -> LaurentSeries:
    return a.scale(c)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    order = min(a.order + (b.valuation if not b.is_zero else b.order + 1),
                b.order + (a.valuation if not a.is_zero else a.order + 1))
    if a.is_zero or b.is_zero:
        return LaurentSeries.zero_series(a.ring, order)
    v = a.valuation + b.valuation
    A, B = a.coeffs, b.coeffs
    la, lb = len(A), len(B)
    if order == INF:
        n_out = la + lb - 1
    else:
        n_out = order - v + 1
        if n_out <= 0:
            return LaurentSeries.zero_series(a.ring, order)
    zero = a.ring.zero
    out = []
    for m in range(n_out):
        acc = zero
        for i in range(max(0, m - lb + 1), min(m, la - 1) + 1):
            acc = acc + A[i] * B[m - i]
        out.append(acc)
    return LaurentSeries(a.ring, v, out, order)


def series_inv(s: LaurentSeries, order=None) -> LaurentSeries:
    """Multiplicative inverse ``t^-v * u^-1`` of ``s = t^v * u``.

    The unit part is inverted by the recursion
    ``r_0 = 1/u_0``, ``r_m = -r_0 * sum_{i=1..m} u_i r_{m-i}``.
    An exact input (order infinity) needs an explicit ``order``; otherwise
    the result is known to ``s.order - 2 v`` (capped at ``order`` if given).
    """
    if s.is_zero:
        raise ZeroDivisionError(f"series has no nonzero coefficient up to t^{s.order}")
    v = s.valuation
    target = s.order - 2 * v
    if order is not None:
        target = min(target, order)
    if target == INF:
        raise ValueError("inverse of an exact series needs an explicit order")
    n_out = target + v + 1
    if n_out <= 0:
        return LaurentSeries.zero_series(s.ring, target)
    ring = s.ring
    u = s.coeffs
    r0 = ring.invert(u[0])
    out = [r0]
    zero = ring.zero
    lu = len(u)
    for m in range(1, n_out):
        acc = zero
        for i in range(1, min(m, lu - 1) + 1):
            acc = acc + u[i] * out[m - i]
        out.append(-(acc * r0))
    return LaurentSeries(ring, -v, out, target)


def series_exp(s: LaurentSeries, order=None) -> LaurentSeries:
    """``sum_k s^k / k!`` for a series without constant term.

    Uses ``n e_n = sum_{k=1..n} k s_k e_{n-k}`` (from E' = s' E).
    """
    if not s.is_zero and s.valuation < 1:
        raise PositiveValuationRequired(
            f"exp needs valuation >= 1, got valuation {s.valuation}")
    target = s.order if order is None else min(s.order, order)
    if target == INF:
        raise ValueError("exp of an exact series needs an explicit order")
    ring = s.ring
    if s.is_zero:
        return LaurentSeries(ring, 0, [ring.one], target)
    sk = [None] + [s.coefficient(k) * k for k in range(1, target + 1)]
    e = [ring.one]
    zero = ring.zero
    for n in range(1, target + 1):
        acc = zero
        for k in range(s.valuation, n + 1):
            c = sk[k]
            if c:
                acc = acc + c * e[n - k]
        e.append(acc * Q(1, n))
    return LaurentSeries(ring, 0, e, target)


def series_pow(s: LaurentSeries, alpha: int) -> LaurentSeries:
    """``s**alpha`` for ``alpha >= 0`` by repeated squaring; ``s**0`` is exactly 1."""
    if alpha < 0:
        raise ValueError("negative powers: use series_inv first")
    result = LaurentSeries.constant(s.ring.one, s.ring)
    base = s
    while alpha:
        if alpha & 1:
            result = series_mul(result, base)
        alpha >>= 1
        if alpha:
            base = series_mul(base, base)
    return result


def egf_coeff(s: LaurentSeries, n: int):
    """``n! [t^n] s`` -- the exponential-generating-function coefficient."""
    if not s.is_zero and s.valuation < 0:
        raise NegativeValuation(f"series has valuation {s.valuation}; not a power series")
    c = s.coefficient(n)
    return c * math.factorial(n)

"""Combinatorial scalars: binomials, falling factorials, Stirling numbers of the second kind."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .backend import Q
from .poly import POLY_RING, X1, BiPoly
from .series import LaurentSeries, egf_coeff

factorial = math.factorial


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n."""
    if k < 0 or n < 0:
        raise ValueError("binomial needs nonnegative arguments")
    return math.comb(n, k)


def falling_factorial(x, k: int):
    """``x (x-1) ... (x-k+1)`` in whatever ring ``x`` lives in; 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    result = x ** 0
    for i in range(k):
        result = result * (x - i)
    return result


@dataclass(frozen=True)
class Stirling2Table:
    """Triangle S2(m, n), 0 <= n <= m <= max_m, from S2(m,n) = n S2(m-1,n) + S2(m-1,n-1)."""

    max_m: int
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def build(cls, max_m: int) -> "Stirling2Table":
        rows = [(1,)]
        for m in range(1, max_m + 1):
            prev = rows[-1]
            row = [0] * (m + 1)
            for n in range(1, m + 1):
                left = prev[n] if n < len(prev) else 0
                row[n] = n * left + prev[n - 1]
            rows.append(tuple(row))
        return cls(max_m, tuple(rows))

    def __call__(self, m: int, n: int) -> int:
        if n > m:
            return 0
        return self.rows[m][n]


@lru_cache(maxsize=None)
def _table(max_m: int) -> Stirling2Table:
    return Stirling2Table.build(max_m)


def stirling2(m: int, n: int) -> int:
    if m < 0 or n < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if n > m:
        return 0
    # share one table per power-of-two size
    size = 16
    while size < m:
        size *= 2
    return _table(size)(m, n)


def stirling2_poly(m: int, n: int) -> BiPoly:
    """S2(m, n; X1) = m! [t^m] (e^t - 1)^n / n! * e^{t X1}.

    Built from the generating function and checked against the
    convolution ``sum_j C(m, j) S2(j, n) X1^(m-j)`` before returning.
    """
    if m < 0 or n < 0:
        raise ValueError("stirling2_poly needs nonnegative arguments")
    via_series = _stirling2_poly_series(m, n)
    via_sum = BiPoly({(m - j, 0): binomial(m, j) * stirling2(j, n) for j in range(m + 1)})
    if via_series != via_sum:
        raise ArithmeticError(f"stirling2_poly({m}, {n}) disagrees between constructions")
    return via_series


def _stirling2_poly_series(m: int, n: int) -> BiPoly:
    em1 = LaurentSeries.exponential(1, m) - 1
    block = (em1 ** n).scale(Q(1, math.factorial(n)))
    lifted = block.map_coefficients(BiPoly.constant, POLY_RING)
    egf = lifted * LaurentSeries.exponential(X1, m, POLY_RING)
    return egf_coeff(egf, m)

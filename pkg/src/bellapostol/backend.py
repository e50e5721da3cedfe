"""Exact rational scalar backend.

Every coefficient in the package is an instance of :data:`Q`.  Two
interchangeable implementations exist:

* ``gmpy2``    -- ``gmpy2.mpq`` (GMP-backed, the fast path, default when importable)
* ``fraction`` -- ``fractions.Fraction`` from the standard library

The choice is made once, at import time, from the ``BELLAPOSTOL_RATIONAL``
environment variable.  Both are canonical (reduced, positive denominator)
and immutable, so rendered output is identical under either backend.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

ENV_VAR = "BELLAPOSTOL_RATIONAL"

_requested = os.environ.get(ENV_VAR, "").strip().lower() or "auto"
if _requested not in ("auto", "gmpy2", "fraction"):
    raise ImportError(f"{ENV_VAR} must be 'gmpy2' or 'fraction', got {_requested!r}")

if _requested in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as Q

        NAME = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        Q = Fraction
        NAME = "fraction"
else:
    Q = Fraction
    NAME = "fraction"

ZERO = Q(0)
ONE = Q(1)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_q(x) -> "Q":
    """Coerce an int, Fraction or backend rational to :data:`Q`."""
    if isinstance(x, Q):
        return x
    if isinstance(x, (int, Fraction)):
        return Q(x.numerator, x.denominator) if isinstance(x, Fraction) else Q(x)
    # the other backend's rational type
    return Q(int(x.numerator), int(x.denominator))


def parse_rational(text: str) -> "Q":
    """Parse ``"p/q"`` or ``"p"``.  Raises ValueError on anything else."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not an exact rational: {text!r}")
    num, _, den = s.partition("/")
    d = int(den) if den else 1
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Q(int(num), d)


def format_rational(q) -> str:
    """Render as ``"p/q"``, or ``"p"`` for integers; no whitespace."""
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"

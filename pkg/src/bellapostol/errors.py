from __future__ import annotations


class BellApostolError(Exception):
    """Base class for domain errors raised by this package."""


class ParameterError(BellApostolError, ValueError):
    """A family or verifier parameter lies outside the supported domain."""


class PoleAtZero(ParameterError, ZeroDivisionError):
    """The generating function has a pole at t=0 (lambda=-1, delta=0, alpha>=1)."""


class PositiveValuationRequired(BellApostolError, ValueError):
    """exp() was applied to a series with a nonzero constant (or polar) part."""


class NegativeValuation(BellApostolError, ValueError):
    """An EGF coefficient was requested from a series that is not a power series."""


class OrderExceeded(BellApostolError, IndexError):
    """A coefficient beyond the guaranteed truncation order was requested."""

"""Global numeric mode: exact rational arithmetic or IEEE floats.

Verification paths default to exact rationals so tight bounds can be checked
with equality; performance paths (LP solves, large simulations) switch to
floats with a fixed absolute tolerance.  The mode chosen here only governs
how new values are materialized (generators, file parsing, CLI input); the
algorithms themselves infer exactness from the data they are handed, so
exact and float objects never get silently mixed by this module.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterable, Iterator, Union

Scalar = Union[int, Fraction, float]

EXACT = "exact"
FLOAT = "float"

#: absolute comparison tolerance applied everywhere in float mode
FLOAT_TOL = 1e-9

_mode: str = EXACT


def set_mode(mode: str) -> None:
    global _mode
    if mode not in (EXACT, FLOAT):
        raise ValueError(f"unknown numeric mode {mode!r}")
    _mode = mode


def get_mode() -> str:
    return _mode


@contextmanager
def numeric_mode(mode: str) -> Iterator[None]:
    """Temporarily switch the global numeric mode."""
    previous = get_mode()
    set_mode(mode)
    try:
        yield
    finally:
        set_mode(previous)


def exact_scalar(value) -> Scalar:
    """Exact representation: ints stay ints, everything else -> Fraction.

    Floats are converted to the exact rational they represent; strings may
    use the "p/q" form.  Non-finite floats are rejected.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r} in exact mode")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def float_scalar(value) -> float:
    if isinstance(value, str):
        value = Fraction(value)
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"non-finite value {value!r}")
    return out


def scalar(value) -> Scalar:
    """Convert ``value`` to the current mode's representation."""
    if _mode == EXACT:
        return exact_scalar(value)
    return float_scalar(value)


def is_exact(value) -> bool:
    """True for ints and Fractions, False for floats."""
    return not isinstance(value, float)


def all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def tol_for(exact: bool) -> Scalar:
    """Comparison tolerance matching the data: 0 exact, FLOAT_TOL float."""
    return 0 if exact else FLOAT_TOL


def format_number(value):
    """JSON-ready form: Fractions as 'p/q' strings, ints/floats as-is."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return value


def parse_number(value) -> Scalar:
    """Inverse of :func:`format_number` under the current mode."""
    return scalar(value)

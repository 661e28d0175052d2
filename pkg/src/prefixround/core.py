"""Assignment types and prefix/interval discrepancy measures.

A fractional assignment is an m x n matrix x with entries in [0, 1] whose
columns each sum to 1; an integral assignment picks one row per column.
The discrepancy measures compare the weighted column mass each row receives
under the two, over prefixes or general column intervals.

Conventions: rows and columns are 0-based in this API.  A prefix is named by
its length t in 1..n, and an interval (s, t) uses 1-based inclusive column
positions, matching the usual summation notation.  JSON serialization uses
1-based row indices throughout (see the serialize module).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .numeric import Scalar, is_exact, scalar, tol_for


class ValidationError(ValueError):
    """An input violates a documented invariant."""


class DimensionError(ValidationError):
    """Shapes of related inputs disagree."""


def _as_matrix(rows: Sequence[Sequence], convert: bool) -> Tuple[Tuple[Scalar, ...], ...]:
    if not rows:
        raise DimensionError("matrix needs at least one row")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise DimensionError(f"ragged rows: widths {sorted(widths)}")
    if widths == {0}:
        raise DimensionError("matrix needs at least one column")
    if convert:
        return tuple(tuple(scalar(v) for v in r) for r in rows)
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class FractionalAssignment:
    """m x n matrix with entries in [0, 1] and unit column sums (row-major)."""

    entries: Tuple[Tuple[Scalar, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], convert: bool = True) -> "FractionalAssignment":
        """Build from row lists; ``convert`` materializes entries in the
        current numeric mode, otherwise values are stored as given."""
        return cls(_as_matrix(rows, convert))

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for row in self.entries for v in row)

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(row[j] for row in self.entries)

    def column_sum(self, j: int) -> Scalar:
        return sum(row[j] for row in self.entries)

    def reversed_columns(self) -> "FractionalAssignment":
        return FractionalAssignment(tuple(tuple(reversed(row)) for row in self.entries))


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive column weights d_1..d_n."""

    values: Tuple[Scalar, ...]

    @classmethod
    def from_values(cls, values: Sequence, convert: bool = True) -> "WeightVector":
        vals = tuple(scalar(v) for v in values) if convert else tuple(values)
        if not vals:
            raise DimensionError("weight vector needs at least one entry")
        for j, v in enumerate(vals):
            if not v > 0:
                raise ValidationError(f"weight {j + 1} is {v}; weights must be positive")
        return cls(vals)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def d_max(self) -> Scalar:
        return max(self.values)

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in self.values)


@dataclass(frozen=True)
class IntegralAssignment:
    """One chosen row per column; ``s[j]`` is the 0-based row of column j."""

    s: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.s)

    def validate(self, m: int) -> None:
        for j, i in enumerate(self.s):
            if not (isinstance(i, int) and 0 <= i < m):
                raise ValidationError(f"column {j + 1} assigned to row {i!r}, outside 0..{m - 1}")

    def induced_matrix(self, m: int) -> Tuple[Tuple[int, ...], ...]:
        """0/1 matrix with unit column sums; row i gets the columns with s[j] == i."""
        self.validate(m)
        return tuple(tuple(1 if self.s[j] == i else 0 for j in range(self.n)) for i in range(m))

    def to_one_based(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i in self.s)

    @classmethod
    def from_one_based(cls, seq: Sequence[int]) -> "IntegralAssignment":
        return cls(tuple(int(i) - 1 for i in seq))


@dataclass(frozen=True)
class SupportMask:
    """Allowed (row, column) pairs; every column must keep at least one row."""

    allowed: Tuple[Tuple[bool, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[bool]]) -> "SupportMask":
        mask = cls(tuple(tuple(bool(v) for v in r) for r in rows))
        widths = {len(r) for r in mask.allowed}
        if len(widths) != 1:
            raise DimensionError(f"ragged mask rows: widths {sorted(widths)}")
        for j in range(mask.n):
            if not any(row[j] for row in mask.allowed):
                raise ValidationError(f"column {j + 1} has no allowed row")
        return mask

    @classmethod
    def from_nonzero(cls, x: FractionalAssignment) -> "SupportMask":
        return cls.from_rows([[v != 0 for v in row] for row in x.entries])

    @property
    def m(self) -> int:
        return len(self.allowed)

    @property
    def n(self) -> int:
        return len(self.allowed[0])

    def allows(self, i: int, j: int) -> bool:
        return self.allowed[i][j]

    def allowed_rows(self, j: int) -> Tuple[int, ...]:
        return tuple(i for i in range(self.m) if self.allowed[i][j])

    def respects(self, y: IntegralAssignment) -> bool:
        return all(self.allowed[y.s[j]][j] for j in range(self.n))


@dataclass(frozen=True)
class DiscrepancyReport:
    """Where and by how much an integral assignment strays from a fractional one.

    ``argmax_prefix`` is (row, prefix length); ``per_row_prefix_extrema`` holds
    (min, max) of the running signed difference over prefix lengths 0..n, so
    each pair brackets 0.  Interval fields are filled by interval_discrepancy
    only; ``argmax_interval`` is (row, s, t) with 1-based inclusive endpoints.
    """

    max_prefix_abs: Scalar
    argmax_prefix: Tuple[int, int]
    per_row_prefix_extrema: Tuple[Tuple[Scalar, Scalar], ...]
    max_interval_abs: Optional[Scalar] = None
    argmax_interval: Optional[Tuple[int, int, int]] = None


def validate_fractional(x: FractionalAssignment) -> Optional[str]:
    """Return a description of the first violated invariant, or None if valid.

    Entries must lie in [0, 1] and every column must sum to 1; exact data is
    checked exactly, float data within the fixed absolute tolerance.
    """
    tol = tol_for(x.exact)
    for i, row in enumerate(x.entries):
        for j, v in enumerate(row):
            if v < -tol or v > 1 + tol:
                return f"entry at row {i + 1}, column {j + 1} is {v}, outside [0, 1]"
    for j in range(x.n):
        total = x.column_sum(j)
        if abs(total - 1) > tol:
            return f"column {j + 1} sums to {total}, expected 1"
    return None


def _check_triple(x: FractionalAssignment, y: IntegralAssignment, d: WeightVector) -> None:
    if y.n != x.n:
        raise DimensionError(f"assignment covers {y.n} columns, matrix has {x.n}")
    if d.n != x.n:
        raise DimensionError(f"{d.n} weights for {x.n} columns")
    y.validate(x.m)


def prefix_discrepancy(x: FractionalAssignment, y: IntegralAssignment,
                       d: WeightVector) -> DiscrepancyReport:
    """Largest |sum_{j<=t} d_j (x_ij - y_ij)| over rows i and prefixes t."""
    _check_triple(x, y, d)
    s, dv = y.s, d.values
    best: Scalar = 0
    best_at = (0, 1)
    extrema = []
    for i, row in enumerate(x.entries):
        delta: Scalar = 0
        lo: Scalar = 0
        hi: Scalar = 0
        for j in range(x.n):
            delta = delta + dv[j] * row[j] - (dv[j] if s[j] == i else 0)
            mag = -delta if delta < 0 else delta
            if mag > best:
                best = mag
                best_at = (i, j + 1)
            if delta < lo:
                lo = delta
            elif delta > hi:
                hi = delta
        extrema.append((lo, hi))
    return DiscrepancyReport(best, best_at, tuple(extrema))


def interval_discrepancy(x: FractionalAssignment, y: IntegralAssignment,
                         d: WeightVector) -> DiscrepancyReport:
    """Largest |sum_{j=s}^{t} d_j (x_ij - y_ij)| over rows and intervals.

    Per row this equals the range of the running prefix difference (with the
    empty prefix included), so one O(n) pass per row suffices.
    """
    _check_triple(x, y, d)
    s, dv = y.s, d.values
    best: Scalar = 0
    best_at = (0, 1)
    extrema = []
    best_iv: Scalar = 0
    best_iv_at = (0, 1, 1)
    for i, row in enumerate(x.entries):
        delta: Scalar = 0
        lo: Scalar = 0
        hi: Scalar = 0
        lo_pos = 0
        hi_pos = 0
        for j in range(x.n):
            delta = delta + dv[j] * row[j] - (dv[j] if s[j] == i else 0)
            mag = -delta if delta < 0 else delta
            if mag > best:
                best = mag
                best_at = (i, j + 1)
            if delta < lo:
                lo = delta
                lo_pos = j + 1
            elif delta > hi:
                hi = delta
                hi_pos = j + 1
        extrema.append((lo, hi))
        span = hi - lo
        if span > best_iv:
            best_iv = span
            p, q = (lo_pos, hi_pos) if lo_pos < hi_pos else (hi_pos, lo_pos)
            best_iv_at = (i, p + 1, q)
    return DiscrepancyReport(best, best_at, tuple(extrema), best_iv, best_iv_at)


def one_sided_interval_excess(x: FractionalAssignment, y: IntegralAssignment,
                              d: WeightVector) -> Scalar:
    """Largest sum_{j=s}^{t} d_j (y_ij - x_ij) over rows and intervals.

    Measures how much extra weighted mass some row receives on some column
    window; never negative, since the chosen row of any single column gets
    at least its fractional share there.
    """
    _check_triple(x, y, d)
    s, dv = y.s, d.values
    best: Scalar = 0
    for i, row in enumerate(x.entries):
        delta: Scalar = 0
        prev_max: Scalar = 0
        for j in range(x.n):
            if delta > prev_max:
                prev_max = delta
            delta = delta + dv[j] * row[j] - (dv[j] if s[j] == i else 0)
            excess = prev_max - delta
            if excess > best:
                best = excess
    return best

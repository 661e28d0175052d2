"""Earliest-deadline rounding of fractional assignments.

Columns are assigned to rows one at a time.  A row is a candidate for the
current column once its fractional prefix mass exceeds its integral mass by
a small threshold; among candidates, the one whose prefix deficit would turn
into a near-unit surplus soonest (the earliest deadline) wins.  The result
keeps every weighted prefix of the integral assignment within
(1 - 1/(2m-2)) * max_j d_j of the fractional one.

Weights are normalized by d_max up front, so the output is invariant under
positive scaling of d.  Runtime is O(mn): each row keeps a deadline cursor
that only moves forward as the row's integral mass grows.
"""

from __future__ import annotations

from bisect import bisect_right
from fractions import Fraction
from typing import List, Optional, Sequence

from .core import (DimensionError, FractionalAssignment, IntegralAssignment,
                   ValidationError, WeightVector, validate_fractional)
from .numeric import FLOAT_TOL, Scalar


def tight_epsilon(m: int, exact: bool = True) -> Scalar:
    """The slack constant 1/(2m-2) driving candidacy and deadlines (0 if m=1)."""
    if m < 2:
        return 0
    return Fraction(1, 2 * m - 2) if exact else 1.0 / (2 * m - 2)


def discrepancy_bound(m: int, d_max: Scalar = 1, exact: bool = True) -> Scalar:
    """Guaranteed prefix-discrepancy bound (1 - 1/(2m-2)) * d_max; 0 for m=1."""
    if m < 2:
        return 0
    return (1 - tight_epsilon(m, exact)) * d_max


def earliest_deadline_round(x: FractionalAssignment, d: WeightVector, *,
                            epsilon_zero: bool = False,
                            debug: bool = False) -> IntegralAssignment:
    """Round x to an integral assignment with bounded prefix discrepancy.

    ``epsilon_zero`` replaces the 1/(2m-2) slack with 0; the variant is
    exposed for experimentation only and carries no bound guarantee.
    ``debug`` re-checks the per-step discrepancy window invariants.
    """
    message = validate_fractional(x)
    if message is not None:
        raise ValidationError(message)
    if d.n != x.n:
        raise DimensionError(f"{d.n} weights for {x.n} columns")
    m, n = x.m, x.n
    if m == 1:
        return IntegralAssignment((0,) * n)

    exact = x.exact and d.exact
    d_max = d.d_max
    dn = [v / d_max for v in d.values]
    eps: Scalar = 0 if epsilon_zero else tight_epsilon(m, exact)
    base_tol: Scalar = 0 if exact else FLOAT_TOL

    prefix: List[List[Scalar]] = []
    for row in x.entries:
        acc: Scalar = 0
        sums = [acc]
        for j in range(n):
            acc = acc + dn[j] * row[j]
            sums.append(acc)
        prefix.append(sums)

    mass: List[Scalar] = [0] * m      # integral prefix mass per row
    cursor = [1] * m                  # first T with prefix[i][T] >= mass[i] + 1 - eps
    no_deadline = n + 1
    chosen: List[int] = []

    for t in range(1, n + 1):
        dt = dn[t - 1]
        threshold = dt / m
        if not epsilon_zero and eps < threshold:
            threshold = eps
        # The float slack is capped below the threshold so a row with zero
        # fractional prefix can never slip into the candidate set.
        slack = base_tol if exact or base_tol < threshold / 2 else threshold / 2
        best_row = -1
        best_deadline = no_deadline + 1
        for i in range(m):
            if prefix[i][t] + slack < mass[i] + threshold:
                continue
            target = mass[i] + 1 - eps
            c = cursor[i]
            row_prefix = prefix[i]
            while c <= n and row_prefix[c] + base_tol < target:
                c += 1
            cursor[i] = c
            deadline = c if c <= n else no_deadline
            if deadline < t:
                deadline = t
            if deadline < best_deadline:
                best_deadline = deadline
                best_row = i
        if best_row < 0:
            raise AssertionError(f"empty candidate set at column {t}; input invalid?")
        chosen.append(best_row)
        mass[best_row] += dt
        if debug:
            lo_bound = -1 + eps - base_tol
            hi_bound = 1 - eps + base_tol
            for i in range(m):
                delta = prefix[i][t] - mass[i]
                assert lo_bound <= delta <= hi_bound, (
                    f"delta {delta} outside [{lo_bound}, {hi_bound}] at row {i}, column {t}")
    return IntegralAssignment(tuple(chosen))


def round_with_open_times(x: FractionalAssignment, d: WeightVector,
                          open_from: Sequence[int], *,
                          epsilon_zero: bool = False,
                          debug: bool = False) -> IntegralAssignment:
    """Round when row i only carries mass from column ``open_from[i]`` on.

    ``open_from[i]`` is the 0-based first column row i may serve (n means
    never).  No special casing is needed: a row with zero fractional prefix
    is never a candidate, so the plain rounding already respects the opening
    pattern; this wrapper validates the input and asserts the output.
    """
    if len(open_from) != x.m:
        raise DimensionError(f"{len(open_from)} open times for {x.m} rows")
    for i, a in enumerate(open_from):
        if not (0 <= a <= x.n):
            raise ValidationError(f"open time of row {i + 1} is {a}, outside 0..{x.n}")
        row = x.entries[i]
        for j in range(a):
            if row[j] != 0:
                raise ValidationError(
                    f"row {i + 1} has mass {row[j]} at column {j + 1} before opening at {a + 1}")
    y = earliest_deadline_round(x, d, epsilon_zero=epsilon_zero, debug=debug)
    for j, i in enumerate(y.s):
        assert j >= open_from[i], f"column {j + 1} assigned to row {i + 1} before it opens"
    return y


def round_with_closing_times(x: FractionalAssignment, d: WeightVector,
                             release: Sequence[Scalar], closing: Sequence[Scalar], *,
                             epsilon_zero: bool = False,
                             debug: bool = False) -> IntegralAssignment:
    """Round when row i only carries columns released by its closing time.

    ``release`` must be nondecreasing and x must put zero mass wherever
    release[j] > closing[i].  Columns and weights are reversed, which turns
    the closing pattern into an opening one, rounded, and reversed back.
    The output additionally keeps every one-sided interval excess below
    (2 - 1/(m-1)) * d_max.
    """
    n, m = x.n, x.m
    if len(release) != n:
        raise DimensionError(f"{len(release)} release times for {n} columns")
    if len(closing) != m:
        raise DimensionError(f"{len(closing)} closing times for {m} rows")
    for j in range(1, n):
        if release[j] < release[j - 1]:
            raise ValidationError(f"release times decrease at column {j + 1}")
    last_open = [bisect_right(list(release), b) for b in closing]  # columns 1..last_open[i]
    for i, row in enumerate(x.entries):
        for j in range(last_open[i], n):
            if row[j] != 0:
                raise ValidationError(
                    f"row {i + 1} has mass at column {j + 1}, released after it closes")
    x_rev = x.reversed_columns()
    d_rev = WeightVector(tuple(reversed(d.values)))
    open_rev = [n - a for a in last_open]
    y_rev = round_with_open_times(x_rev, d_rev, open_rev,
                                  epsilon_zero=epsilon_zero, debug=debug)
    y = IntegralAssignment(tuple(y_rev.s[n - 1 - j] for j in range(n)))
    for j, i in enumerate(y.s):
        assert release[j] <= closing[i], \
            f"column {j + 1} assigned to row {i + 1} after it closes"
    return y

"""Named hard instances and seeded random generators.

The three named constructions pin down how far rounding quality can be
pushed: ``gen_caplb`` forces prefix discrepancy 1 - 1/(2m-2) on m rows,
``gen_carlb`` forces it arbitrarily close to 1 once assignments must stay on
the support, and ``gen_intlb`` is a three-row instance whose best interval
discrepancy exceeds the weight bound outright.  ``gen_fifo_lb`` is the
scheduling counterpart: a staircase of closing times on which FIFO pays a
harmonic-sum flow time while a batch-per-machine assignment pays 1.

Random generators take explicit seeds and draw in a documented order, so
instances are reproducible byte for byte across runs and platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .core import (FractionalAssignment, SupportMask, ValidationError,
                   WeightVector)
from .numeric import Scalar, exact_scalar, scalar
from .scheduling import SchedulingInstance


def gen_caplb(m: int) -> Tuple[FractionalAssignment, WeightVector]:
    """Capped instance on m rows, m - 1 unit-weight columns.

    First column: 1/(2m-2) on rows 1..m-1 and 1/2 on row m; every later
    column spreads 1/(m-1) over rows 1..m-1.  No integral assignment gets
    prefix discrepancy below 1 - 1/(2m-2).
    """
    if m < 2:
        raise ValidationError("need at least two rows")
    n = m - 1
    eps = Fraction(1, 2 * m - 2)
    share = Fraction(1, m - 1)
    rows: List[List[Scalar]] = []
    for i in range(m - 1):
        rows.append([eps] + [share] * (n - 1))
    rows.append([Fraction(1, 2)] + [Fraction(0)] * (n - 1))
    x = FractionalAssignment.from_rows(rows)
    d = WeightVector.from_values([1] * n)
    return x, d


def gen_carlb(delta: Scalar) -> Tuple[FractionalAssignment, SupportMask, WeightVector]:
    """Three-row instance whose support-respecting optimum is 1 - delta.

    One opening column (delta, 0, 1-delta) followed by p copies of the pair
    (1-2*delta, 2*delta, 0), (2*delta, 0, 1-2*delta), where p is the smallest
    integer with 2*p*delta >= 1 - delta.  The support mask allows exactly the
    nonzero entries, so row 1 must absorb either the opening column or a full
    pair, and each option costs at least 1 - delta somewhere.
    """
    dlt = exact_scalar(delta)
    if not 0 < dlt < Fraction(1, 2):
        raise ValidationError("delta must lie strictly between 0 and 1/2")
    p = math.ceil((1 - dlt) / (2 * dlt))
    rows: List[List[Scalar]] = [[dlt], [Fraction(0)], [1 - dlt]]
    for _ in range(p):
        rows[0] += [1 - 2 * dlt, 2 * dlt]
        rows[1] += [2 * dlt, Fraction(0)]
        rows[2] += [Fraction(0), 1 - 2 * dlt]
    x = FractionalAssignment.from_rows(rows)
    mask = SupportMask.from_nonzero(x)
    d = WeightVector.from_values([1] * x.n)
    return x, mask, d


def gen_intlb() -> Tuple[FractionalAssignment, WeightVector]:
    """Three rows, 100 identical unit-weight columns (1/100, 48/100, 51/100).

    Every integral assignment has interval discrepancy at least 33/25, which
    exceeds the largest weight; prefix discrepancy admits no such instance.
    """
    col = (Fraction(1, 100), Fraction(48, 100), Fraction(51, 100))
    n = 100
    rows = [[c] * n for c in col]
    x = FractionalAssignment.from_rows(rows)
    d = WeightVector.from_values([1] * n)
    return x, d


def gen_fifo_lb(m: int, delta: Scalar) -> Tuple[SchedulingInstance, Tuple[int, ...]]:
    """Staircase scheduling instance where FIFO cascades onto one machine.

    Machine i closes at i*delta.  Batch j arrives at j*delta with m-j+1 jobs
    of work 1/(m-j+1) each, for j = 1..m.  Least-loaded FIFO funnels every
    batch onto the surviving machines and ends with flow time near the m-th
    harmonic number, while sending batch j to machine j (returned as the
    second element, 0-based per job) achieves maximum flow time exactly 1.

    delta must be below 1/m**2 so the cascade never drains between batches.
    """
    if m < 2:
        raise ValidationError("need at least two machines")
    dlt = scalar(delta)
    if not 0 < dlt < scalar(Fraction(1, m * m)):
        raise ValidationError("delta must lie strictly between 0 and 1/m^2")
    closing = [i * dlt for i in range(1, m + 1)]
    release: List[Scalar] = []
    work: List[Scalar] = []
    opt: List[int] = []
    for j in range(1, m + 1):
        count = m - j + 1
        piece = scalar(Fraction(1, count))
        release += [j * dlt] * count
        work += [piece] * count
        opt += [j - 1] * count
    inst = SchedulingInstance.build(closing, release, work)
    return inst, tuple(opt)


@dataclass(frozen=True)
class RandomSpec:
    """Recipe for one random rounding instance.

    weight_mode: "uniform" draws weights from (0, 1], "ones" fixes them at 1,
    "two_valued" flips a fair coin between 1 and ``low`` per column.
    support_density, when set, keeps each entry with that probability
    (repairing empty columns) and renormalizes.
    """

    m: int
    n: int
    seed: int
    weight_mode: str = "uniform"
    low: Scalar = 0.01
    support_density: Optional[float] = None


def gen_random(spec: RandomSpec) -> Tuple[FractionalAssignment, WeightVector,
                                          Optional[SupportMask]]:
    """Random instance from a spec; honors the active numeric mode.

    Draw order per instance: column simplex points (m-1 uniforms per column,
    left to right), then weights (one draw per column as the mode requires),
    then the support mask row-major.  Columns are uniform on the simplex via
    sorted-gap sampling; subtractions run in the target arithmetic so exact
    columns sum to exactly 1.
    """
    if spec.m < 1 or spec.n < 1:
        raise ValidationError("need at least one row and one column")
    if spec.weight_mode not in ("uniform", "ones", "two_valued"):
        raise ValidationError(f"unknown weight mode {spec.weight_mode!r}")
    rng = np.random.default_rng(spec.seed)
    one = scalar(1)
    rows: List[List[Scalar]] = [[] for _ in range(spec.m)]
    for _ in range(spec.n):
        cuts = sorted(scalar(u) for u in rng.random(spec.m - 1).tolist())
        prev: Scalar = 0
        for i in range(spec.m):
            nxt = cuts[i] if i < spec.m - 1 else one
            rows[i].append(nxt - prev)
            prev = nxt

    if spec.weight_mode == "ones":
        weights: List[Scalar] = [one] * spec.n
    elif spec.weight_mode == "uniform":
        weights = [one - scalar(u) for u in rng.random(spec.n).tolist()]
    else:
        low = scalar(spec.low)
        if not 0 < low <= 1:
            raise ValidationError("two_valued low weight must lie in (0, 1]")
        flips = rng.random(spec.n)
        weights = [one if f < 0.5 else low for f in flips]

    mask = None
    if spec.support_density is not None:
        dens = spec.support_density
        if not 0 < dens <= 1:
            raise ValidationError("support density must lie in (0, 1]")
        keep = rng.random((spec.m, spec.n)) < dens
        for j in range(spec.n):
            if not keep[:, j].any():
                keep[rng.integers(spec.m), j] = True
        for j in range(spec.n):
            total: Scalar = 0
            for i in range(spec.m):
                if not keep[i][j]:
                    rows[i][j] = scalar(0)
                total += rows[i][j]
            if total == 0:
                # masked column lost all mass: put everything on a kept row
                i = int(np.flatnonzero(keep[:, j])[0])
                rows[i][j] = one
            else:
                for i in range(spec.m):
                    rows[i][j] = rows[i][j] / total
        mask = SupportMask.from_rows([[bool(keep[i][j]) for j in range(spec.n)]
                                      for i in range(spec.m)])

    x = FractionalAssignment.from_rows(rows, convert=False)
    d = WeightVector.from_values(weights, convert=False)
    return x, d, mask


def gen_random_scheduling(m: int, n: int, seed: int) -> SchedulingInstance:
    """Random feasible scheduling instance.

    Draw order: n releases (sorted), n work amounts from (0, 1], m closing
    times from [0.2, 1.2].  The latest-closing machine is pushed out to the
    last release if needed so every job has an open machine.
    """
    if m < 1 or n < 1:
        raise ValidationError("need at least one machine and one job")
    rng = np.random.default_rng(seed)
    release = sorted(scalar(u) for u in rng.random(n).tolist())
    work = [scalar(1.0 - u) for u in rng.random(n).tolist()]
    closing = [scalar(0.2 + u) for u in rng.random(m).tolist()]
    top = max(range(m), key=lambda i: closing[i])
    if closing[top] < release[-1]:
        closing[top] = release[-1]
    return SchedulingInstance.build(closing, release, work)

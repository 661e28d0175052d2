"""Maximum flow-time scheduling on machines with closing times.

A job j (release r_j, processing time d_j) may run on machine i only if
r_j <= b_i, where b_i is the machine's closing time.  The pipeline here:

  1. solve an interval-load LP relaxation of the minimum max flow-time by
     constraint generation (its optimum T lower-bounds every schedule),
  2. round the fractional machine assignment with the closing-time variant
     of earliest-deadline rounding,
  3. simulate each machine first-come-first-served.

The resulting max flow-time is certified against
(3 - 1/(m-1)) * max(T, d_max).  A FIFO online baseline and an exact
simulator for arbitrary assignments are included for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import linprog

from .core import (DimensionError, FractionalAssignment, IntegralAssignment,
                   ValidationError, WeightVector)
from .numeric import FLOAT_TOL, Scalar, is_exact
from .rounding import round_with_closing_times
from .simplex import OPTIMAL, solve_exact_lp


class InfeasibleInstanceError(ValidationError):
    """Some job has no machine open at its release."""


@dataclass(frozen=True)
class SchedulingInstance:
    """Machines with closing times and release-sorted jobs."""

    closing: Tuple[Scalar, ...]
    release: Tuple[Scalar, ...]
    work: Tuple[Scalar, ...]

    @classmethod
    def build(cls, closing: Sequence, release: Sequence, work: Sequence) -> "SchedulingInstance":
        inst = cls(tuple(closing), tuple(release), tuple(work))
        inst.validate()
        return inst

    def validate(self) -> None:
        if not self.closing:
            raise DimensionError("need at least one machine")
        if len(self.release) != len(self.work):
            raise DimensionError(f"{len(self.release)} releases for {len(self.work)} jobs")
        if not self.release:
            raise DimensionError("need at least one job")
        for j, d in enumerate(self.work):
            if not d > 0:
                raise ValidationError(f"job {j + 1} has processing time {d}")
        for j in range(1, self.n):
            if self.release[j] < self.release[j - 1]:
                raise ValidationError(f"jobs not sorted by release at position {j + 1}")
        for j, r in enumerate(self.release):
            if r < 0:
                raise ValidationError(f"job {j + 1} released at negative time {r}")
            if not any(r <= b for b in self.closing):
                raise InfeasibleInstanceError(f"job {j + 1} has no open machine")

    @property
    def m(self) -> int:
        return len(self.closing)

    @property
    def n(self) -> int:
        return len(self.release)

    @property
    def d_max(self) -> Scalar:
        return max(self.work)

    @property
    def exact(self) -> bool:
        finite = [b for b in self.closing if not (isinstance(b, float) and math.isinf(b))]
        return (all(is_exact(v) for v in self.release)
                and all(is_exact(v) for v in self.work)
                and all(is_exact(v) for v in finite))

    def machine_open(self, i: int, j: int) -> bool:
        return self.release[j] <= self.closing[i]

    def open_machines(self, j: int) -> Tuple[int, ...]:
        return tuple(i for i in range(self.m) if self.machine_open(i, j))


@dataclass
class LPSolution:
    """Optimal value T, a fractional assignment attaining it, and the tight
    interval constraints as fully 1-based (machine, s, t) triples."""

    T: Scalar
    x: FractionalAssignment
    certificate: Tuple[Tuple[int, int, int], ...]
    rounds: int = 0


@dataclass
class Schedule:
    """Per-job start/completion under per-machine FIFO processing."""

    assignment: IntegralAssignment
    start: Tuple[Scalar, ...]
    completion: Tuple[Scalar, ...]
    max_flow_time: Scalar
    argmax_job: int
    lp: Optional[LPSolution] = None

    def machine_loads(self, m: int) -> Tuple[Scalar, ...]:
        loads: List[Scalar] = [0] * m
        for j, i in enumerate(self.assignment.s):
            loads[i] += self.completion[j] - self.start[j]
        return tuple(loads)


def build_schedule(inst: SchedulingInstance, assignment: IntegralAssignment) -> Schedule:
    """Simulate the assignment: each machine runs its jobs in release order,
    never idling while one is available."""
    if assignment.n != inst.n:
        raise DimensionError(f"assignment covers {assignment.n} jobs, instance has {inst.n}")
    assignment.validate(inst.m)
    frontier: List[Scalar] = [0] * inst.m
    start: List[Scalar] = []
    completion: List[Scalar] = []
    max_flow: Scalar = 0
    argmax = 0
    for j, i in enumerate(assignment.s):
        if not inst.machine_open(i, j):
            raise ValidationError(
                f"job {j + 1} assigned to machine {i + 1}, closed before release")
        begin = frontier[i] if frontier[i] > inst.release[j] else inst.release[j]
        done = begin + inst.work[j]
        frontier[i] = done
        start.append(begin)
        completion.append(done)
        flow = done - inst.release[j]
        if flow > max_flow:
            max_flow = flow
            argmax = j
    return Schedule(assignment, tuple(start), tuple(completion), max_flow, argmax)


def fifo_schedule(inst: SchedulingInstance) -> Schedule:
    """Online baseline: each job goes to the open machine with the least
    remaining assigned work at its release, ties to the lowest index."""
    frontier: List[Scalar] = [0] * inst.m
    chosen: List[int] = []
    for j in range(inst.n):
        r = inst.release[j]
        best = -1
        best_rem: Scalar = 0
        for i in range(inst.m):
            if not inst.machine_open(i, j):
                continue
            rem = frontier[i] - r
            if rem < 0:
                rem = 0
            if best < 0 or rem < best_rem:
                best = i
                best_rem = rem
        if best < 0:
            raise InfeasibleInstanceError(f"job {j + 1} has no open machine")
        chosen.append(best)
        begin = frontier[best] if frontier[best] > r else r
        frontier[best] = begin + inst.work[j]
    return build_schedule(inst, IntegralAssignment(tuple(chosen)))


def _most_violated(inst: SchedulingInstance, T: Scalar, xrows: Sequence[Sequence[Scalar]],
                   existing: set) -> Tuple[Scalar, Optional[Tuple[int, int, int]]]:
    """Scan all (machine, s, t) interval constraints for the most violated.

    For fixed machine and t, the worst s maximizes r_s - W_{s-1} where W is
    the machine's weighted prefix, so one running maximum per machine finds
    the overall worst in O(mn).  Ties break lexicographically by (i, s, t).
    """
    r = inst.release
    best_viol: Scalar = 0
    best_key: Optional[Tuple[int, int, int]] = None
    for i in range(inst.m):
        row = xrows[i]
        W: Scalar = 0
        run_best: Scalar = r[0]      # max over s<=t of r_s - W_{s-1}
        run_s = 1
        for t in range(1, inst.n + 1):
            cand = r[t - 1] - W
            if cand > run_best:
                run_best = cand
                run_s = t
            W = W + inst.work[t - 1] * row[t - 1]
            viol = (W - r[t - 1]) + run_best - T
            if viol > best_viol:
                key = (i, run_s, t)
                if key not in existing:
                    best_viol = viol
                    best_key = key
    return best_viol, best_key


def solve_lp(inst: SchedulingInstance, *, exact: Optional[bool] = None,
             full_formulation: bool = False, tol: float = FLOAT_TOL,
             with_certificate: bool = True) -> LPSolution:
    """Minimize T subject to unit job coverage and, for every machine i and
    job interval [s, t], interval load <= (r_t - r_s) + T, with x_ij = 0 on
    closed machines.

    Constraints are generated lazily from the most violated one (or all at
    once with ``full_formulation``).  ``exact`` selects rational simplex
    arithmetic; by default it follows the instance data.
    """
    if exact is None:
        exact = inst.exact
    m, n = inst.m, inst.n
    var_of = {}
    for j in range(n):
        for i in inst.open_machines(j):
            var_of[(i, j)] = 1 + len(var_of)     # variable 0 is T
    nvars = 1 + len(var_of)

    rows_eq: List[List[Scalar]] = []
    for j in range(n):
        row = [0] * nvars
        for i in inst.open_machines(j):
            row[var_of[(i, j)]] = 1
        rows_eq.append(row)
    rhs_eq = [1] * n

    def interval_row(i: int, s: int, t: int) -> Tuple[List[Scalar], Scalar]:
        row = [0] * nvars
        row[0] = -1
        for j in range(s - 1, t):
            k = var_of.get((i, j))
            if k is not None:
                row[k] = inst.work[j]
        return row, inst.release[t - 1] - inst.release[s - 1]

    active: List[Tuple[int, int, int]] = []
    if full_formulation:
        active = [(i, s, t) for i in range(m) for s in range(1, n + 1)
                  for t in range(s, n + 1)]
    else:
        active = [(i, t, t) for i in range(m) for t in range(1, n + 1)
                  if (i, t - 1) in var_of]
    active_set = set(active)

    c = [0] * nvars
    c[0] = 1
    rounds = 0
    max_rounds = 10 * m * n * n + 100
    while True:
        rounds += 1
        if rounds > max_rounds:
            raise RuntimeError("constraint generation failed to converge")
        rows_ub = []
        rhs_ub = []
        for (i, s, t) in active:
            row, rhs = interval_row(i, s, t)
            rows_ub.append(row)
            rhs_ub.append(rhs)
        if exact:
            res = solve_exact_lp(c, rows_ub, rhs_ub, rows_eq, rhs_eq)
            if res.status != OPTIMAL:
                raise InfeasibleInstanceError(f"interval-load LP is {res.status}")
            sol = res.x
        else:
            res = linprog(np.array(c, dtype=float),
                          A_ub=np.array(rows_ub, dtype=float),
                          b_ub=np.array(rhs_ub, dtype=float),
                          A_eq=np.array(rows_eq, dtype=float),
                          b_eq=np.array(rhs_eq, dtype=float),
                          bounds=(0, None), method="highs")
            if not res.success:
                raise InfeasibleInstanceError(f"interval-load LP solve failed: {res.message}")
            sol = res.x.tolist()
        T = sol[0]
        xrows = [[sol[var_of[(i, j)]] if (i, j) in var_of else 0 for j in range(n)]
                 for i in range(m)]
        if full_formulation:
            break
        viol_tol = 0 if exact else tol
        viol, key = _most_violated(inst, T, xrows, active_set)
        if key is None or viol <= viol_tol:
            break
        active.append(key)
        active_set.add(key)

    if not exact:
        xrows = [[min(1.0, v) if v > 0 else 0.0 for v in row] for row in xrows]
        for j in range(n):
            total = sum(row[j] for row in xrows)
            if abs(total - 1) > 1e-6:
                raise RuntimeError(f"LP column {j + 1} sums to {total}")
            if total != 1:
                for row in xrows:
                    row[j] /= total
    x = FractionalAssignment.from_rows(xrows, convert=False)

    certificate: List[Tuple[int, int, int]] = []
    if with_certificate:
        cert_tol = 0 if exact else 1e-7
        for i in range(m):
            prefix: List[Scalar] = [0]
            for j in range(n):
                prefix.append(prefix[-1] + inst.work[j] * xrows[i][j])
            for s in range(1, n + 1):
                for t in range(s, n + 1):
                    load = prefix[t] - prefix[s - 1]
                    slackness = (inst.release[t - 1] - inst.release[s - 1]) + T - load
                    if abs(slackness) <= cert_tol:
                        certificate.append((i + 1, s, t))
    return LPSolution(T, x, tuple(certificate), rounds)


def approx_schedule(inst: SchedulingInstance, *, exact: Optional[bool] = None,
                    full_formulation: bool = False) -> Schedule:
    """LP-round-simulate pipeline; max flow-time stays within a factor
    (3 - 1/(m-1)) of max(T, d_max), hence of the offline optimum."""
    if inst.m < 2:
        raise ValidationError("approx_schedule needs at least two machines")
    lp = solve_lp(inst, exact=exact, full_formulation=full_formulation)
    d = WeightVector.from_values(inst.work, convert=False)
    y = round_with_closing_times(lp.x, d, inst.release, inst.closing)
    schedule = build_schedule(inst, y)
    schedule.lp = lp
    return schedule


def approx_ratio_bound(m: int, exact: bool = True) -> Scalar:
    """Certified ratio (3 - 1/(m-1)) for m >= 2."""
    if m < 2:
        raise ValidationError("ratio defined for m >= 2")
    return 3 - (Fraction(1, m - 1) if exact else 1.0 / (m - 1))

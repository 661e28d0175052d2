"""Exact minimum-discrepancy search over integral assignments.

Columns are branched on left to right.  For the prefix objective the search
state is the per-row signed difference between fractional and integral
weighted prefix mass; for the interval objective each row additionally
carries the running (min, max) window of that difference, whose width is the
row's worst interval magnitude.  Both objectives only ever grow along a
path, which gives the pruning rule.

Memoized entries record lower bounds on the best completion value reachable
from a state (for the interval objective, a state whose windows contain a
recorded state's windows can only do worse), so entries stay valid as the
incumbent shrinks.  Entries are used for pruning only; any improving
completion is walked explicitly, which keeps the reported witness attached
to the reported optimum.  Plain exhaustive enumeration is provided as an
independent cross-check of the whole search.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import List, Optional, Tuple

from .core import (DimensionError, FractionalAssignment, IntegralAssignment,
                   SupportMask, ValidationError, WeightVector,
                   interval_discrepancy, prefix_discrepancy)
from .numeric import FLOAT_TOL, Scalar, exact_scalar, float_scalar
from .rounding import earliest_deadline_round

PREFIX = "prefix"
INTERVAL = "interval"

STATUS_EXACT = "exact"
STATUS_LIMIT = "limit_reached"


@dataclass
class SearchConfig:
    """Knobs for the exact search.

    ``threshold`` switches to decision mode: does some assignment achieve
    objective <= threshold?  (A "no" therefore certifies a strict lower
    bound.)  ``node_limit``/``time_limit`` cap the search; exceeding either
    yields status "limit_reached" and never a false verdict.
    """

    objective: str = PREFIX
    support: Optional[SupportMask] = None
    threshold: Optional[Scalar] = None
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    use_memo: bool = True
    seed_incumbent: bool = True


@dataclass
class SearchResult:
    optimum: Optional[Scalar]
    witness: Optional[IntegralAssignment]
    nodes_explored: int
    status: str
    threshold_answer: Optional[bool] = None


class _LimitReached(Exception):
    pass


class _Found(Exception):
    pass


def _objective_value(x: FractionalAssignment, y: IntegralAssignment,
                     d: WeightVector, objective: str) -> Scalar:
    if objective == PREFIX:
        return prefix_discrepancy(x, y, d).max_prefix_abs
    report = interval_discrepancy(x, y, d)
    return report.max_interval_abs


class _Search:
    """Depth-first search over assignments, column by column.

    Exact inputs are rescaled to integers (every delta is a multiple of one
    over the lcm of the input denominators), so state hashing and arithmetic
    stay cheap; results convert back on the way out.  Float inputs run as
    floats with rounded memo keys.
    """

    def __init__(self, x: FractionalAssignment, d: WeightVector, cfg: SearchConfig):
        if d.n != x.n:
            raise DimensionError(f"{d.n} weights for {x.n} columns")
        if cfg.objective not in (PREFIX, INTERVAL):
            raise ValidationError(f"unknown objective {cfg.objective!r}")
        if cfg.threshold is not None and not cfg.threshold > 0:
            raise ValidationError("decision threshold must be positive")
        if cfg.support is not None and (cfg.support.m != x.m or cfg.support.n != x.n):
            raise DimensionError("support mask shape does not match the matrix")
        self.cfg = cfg
        self.m, self.n = x.m, x.n
        self.exact = x.exact and d.exact
        self.tol = 0 if self.exact else FLOAT_TOL
        col_mass = [[d.values[j] * x.entries[i][j] for i in range(self.m)]
                    for j in range(x.n)]
        if self.exact:
            self.scale = math.lcm(*(Fraction(v).denominator
                                    for col in col_mass for v in col),
                                  *(Fraction(v).denominator for v in d.values))
            self.col_mass = [tuple(int(v * self.scale) for v in col) for col in col_mass]
            self.dvals = [int(v * self.scale) for v in d.values]
        else:
            self.scale = None
            self.col_mass = [tuple(col) for col in col_mass]
            self.dvals = list(d.values)
        if cfg.support is None:
            self.allowed = [tuple(range(self.m))] * x.n
        else:
            self.allowed = [cfg.support.allowed_rows(j) for j in range(x.n)]
        self.delta: List[Scalar] = [0] * self.m
        self.windows: List[List[Scalar]] = [[0, 0] for _ in range(self.m)]
        self.choices: List[int] = []
        self.nodes = 0
        self.deadline = None if cfg.time_limit is None else time.monotonic() + cfg.time_limit
        self.memo = {} if cfg.use_memo else None
        self.best_value: Optional[Scalar] = None
        self.best_witness: Optional[Tuple[int, ...]] = None

    # -- unit conversion ----------------------------------------------------

    def to_internal(self, value: Scalar) -> Scalar:
        if self.scale is None:
            return value
        scaled = Fraction(value) * self.scale
        assert scaled.denominator == 1, "value off the instance grid"
        return scaled.numerator

    def to_external(self, value: Optional[Scalar]) -> Optional[Scalar]:
        if value is None or self.scale is None:
            return value
        out = Fraction(value, self.scale)
        return out.numerator if out.denominator == 1 else out

    # -- bookkeeping ------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.cfg.node_limit is not None and self.nodes > self.cfg.node_limit:
            raise _LimitReached
        if self.deadline is not None and self.nodes % 1024 == 0 \
                and time.monotonic() > self.deadline:
            raise _LimitReached

    def _key(self, t: int):
        if self.exact:
            return (t, tuple(self.delta))
        return (t, tuple(round(v, 9) for v in self.delta))

    def _window_tuple(self) -> Tuple[Tuple[Scalar, Scalar], ...]:
        return tuple((w[0], w[1]) for w in self.windows)

    def _memo_bound(self, key, win) -> Optional[Scalar]:
        """Best recorded lower bound applying to the current state."""
        if self.memo is None:
            return None
        entries = self.memo.get(key)
        if entries is None:
            return None
        if self.cfg.objective == PREFIX:
            return entries
        best = None
        for ewin, bound in entries:
            if all(ew[0] >= sw[0] and ew[1] <= sw[1] for ew, sw in zip(ewin, win)):
                if best is None or bound > best:
                    best = bound
        return best

    def _memo_record(self, key, win, bound: Scalar) -> None:
        if self.memo is None or bound == 0:
            return
        if self.cfg.objective == PREFIX:
            old = self.memo.get(key)
            if old is None or bound > old:
                self.memo[key] = bound
            return
        entries = self.memo.setdefault(key, [])
        # drop entries the new record strictly covers (narrower window, >= bound)
        kept = [(ewin, eb) for ewin, eb in entries
                if not (eb <= bound and
                        all(sw[0] >= ew[0] and sw[1] <= ew[1] for ew, sw in zip(ewin, win)))]
        kept.append((win, bound))
        self.memo[key] = kept

    # -- step mechanics ---------------------------------------------------

    def _enter_column(self, t: int) -> List[Tuple[Scalar, Scalar]]:
        """Add column t's fractional mass to every row; returns saved windows."""
        mass = self.col_mass[t - 1]
        saved = []
        for r in range(self.m):
            saved.append((self.windows[r][0], self.windows[r][1]))
            self.delta[r] += mass[r]
        return saved

    def _leave_column(self, t: int, saved) -> None:
        mass = self.col_mass[t - 1]
        for r in range(self.m):
            self.delta[r] -= mass[r]
            self.windows[r][0], self.windows[r][1] = saved[r]

    def _assign(self, t: int, i: int) -> Scalar:
        """Commit column t to row i; returns the step value (new worst row)."""
        self.delta[i] -= self.dvals[t - 1]
        value: Scalar = 0
        for r in range(self.m):
            dv = self.delta[r]
            if self.cfg.objective == PREFIX:
                mag = -dv if dv < 0 else dv
            else:
                w = self.windows[r]
                if dv < w[0]:
                    w[0] = dv
                elif dv > w[1]:
                    w[1] = dv
                mag = w[1] - w[0]
            if mag > value:
                value = mag
        return value

    def _unassign(self, t: int, i: int, saved) -> None:
        self.delta[i] += self.dvals[t - 1]
        if self.cfg.objective == INTERVAL:
            for r in range(self.m):
                self.windows[r][0], self.windows[r][1] = saved[r]

    def _ordered_rows(self, t: int) -> List[int]:
        rows = self.allowed[t - 1]
        if len(rows) == 1:
            return list(rows)
        return sorted(rows, key=lambda r: -self.delta[r])

    # -- the search pass ----------------------------------------------------

    def _reset_state(self) -> None:
        # a pass aborted by _Found leaves partial assignments in the deltas
        self.delta = [0] * self.m
        self.windows = [[0, 0] for _ in range(self.m)]
        self.choices = []

    def _pass(self, t: int, limit: Optional[Scalar], strict: bool,
              path_val: Scalar) -> None:
        """One depth-first pass: raise _Found at the first completion whose
        step values all stay under ``limit`` (strictly when ``strict``),
        recording the completion as the new incumbent.

        Returning normally certifies there is no such completion below this
        state, which is memoized as "no completion < limit" (the non-strict
        pass only proves the weaker "none <= limit"; storing ``limit`` is
        valid for both readings and the two never share a memo anyway).
        Entries keep pruning later passes because limits only shrink.
        """
        self._tick()
        if t > self.n:
            self.best_value = path_val
            self.best_witness = tuple(self.choices)
            raise _Found
        saved_win = self._enter_column(t)
        key = self._key(t)
        win = self._window_tuple() if self.cfg.objective == INTERVAL else None
        if limit is not None:
            bound = self._memo_bound(key, win)
            if bound is not None and bound >= limit:
                self._leave_column(t, saved_win)
                return
        try:
            for i in self._ordered_rows(t):
                value = self._assign(t, i)
                if limit is None or (value < limit if strict else value <= limit):
                    self.choices.append(i)
                    try:
                        self._pass(t + 1, limit, strict,
                                   value if value > path_val else path_val)
                    finally:
                        self.choices.pop()
                self._unassign(t, i, saved_win)
            if limit is not None:
                self._memo_record(key, win, limit)
        finally:
            self._leave_column(t, saved_win)

    def run_decision(self, threshold: Scalar) -> None:
        if self.exact:
            # value <= threshold over the grid means value <= floor(threshold * scale)
            limit: Scalar = math.floor(Fraction(threshold) * self.scale)
        else:
            limit = threshold + self.tol
        self._reset_state()
        self._pass(1, limit, False, 0)

    def run_optimize(self) -> None:
        """Chase strictly better completions until none exists.

        Each restart reuses the memo, so exhausted regions are never walked
        twice; the incumbent found at a leaf is by construction attached to
        its value.  Float runs stop once no completion beats the incumbent
        by more than the tolerance.
        """
        while True:
            if self.best_value is None:
                limit = None
            elif self.exact:
                limit = self.best_value
            else:
                limit = self.best_value - FLOAT_TOL
            self._reset_state()
            try:
                self._pass(1, limit, True, 0)
            except _Found:
                continue
            return


def _seed(x: FractionalAssignment, d: WeightVector,
          cfg: SearchConfig) -> Optional[Tuple[Scalar, IntegralAssignment]]:
    if not cfg.seed_incumbent:
        return None
    y = earliest_deadline_round(x, d)
    if cfg.support is not None and not cfg.support.respects(y):
        return None
    return _objective_value(x, y, d, cfg.objective), y


def _run(x: FractionalAssignment, d: WeightVector, cfg: SearchConfig) -> SearchResult:
    search = _Search(x, d, cfg)
    seed = _seed(x, d, cfg)

    if cfg.threshold is not None:
        if seed is not None and seed[0] <= cfg.threshold + search.tol:
            return SearchResult(seed[0], seed[1], 0, STATUS_EXACT, threshold_answer=True)
        try:
            search.run_decision(cfg.threshold)
        except _Found:
            witness = IntegralAssignment(search.best_witness)
            return SearchResult(search.to_external(search.best_value), witness,
                                search.nodes, STATUS_EXACT, threshold_answer=True)
        except _LimitReached:
            return SearchResult(None, None, search.nodes, STATUS_LIMIT,
                                threshold_answer=None)
        return SearchResult(None, None, search.nodes, STATUS_EXACT,
                            threshold_answer=False)

    if seed is not None:
        search.best_value = search.to_internal(seed[0])
        search.best_witness = tuple(seed[1].s)
    status = STATUS_EXACT
    try:
        search.run_optimize()
    except _LimitReached:
        status = STATUS_LIMIT
    witness = None if search.best_witness is None else IntegralAssignment(search.best_witness)
    return SearchResult(search.to_external(search.best_value), witness, search.nodes, status)


def exact_min_prefix_discrepancy(x: FractionalAssignment, d: WeightVector,
                                 cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Minimum prefix discrepancy over integral assignments (optionally
    restricted to a support mask, or run as a threshold decision)."""
    cfg = replace(cfg, objective=PREFIX) if cfg is not None else SearchConfig(objective=PREFIX)
    return _run(x, d, cfg)


def exact_min_interval_discrepancy(x: FractionalAssignment, d: WeightVector,
                                   cfg: Optional[SearchConfig] = None) -> SearchResult:
    """Minimum interval discrepancy over integral assignments."""
    cfg = replace(cfg, objective=INTERVAL) if cfg is not None \
        else SearchConfig(objective=INTERVAL)
    return _run(x, d, cfg)


def brute_force_min(x: FractionalAssignment, d: WeightVector,
                    objective: str = PREFIX,
                    support: Optional[SupportMask] = None) -> Tuple[Scalar, IntegralAssignment]:
    """Exhaustive enumeration over all (support-respecting) assignments.

    Independent of the branch-and-bound machinery: every candidate is scored
    from scratch with the core discrepancy routines.
    """
    if support is None:
        pools = [range(x.m)] * x.n
    else:
        pools = [support.allowed_rows(j) for j in range(x.n)]
    best: Optional[Scalar] = None
    best_y: Optional[IntegralAssignment] = None
    for combo in itertools.product(*pools):
        y = IntegralAssignment(combo)
        value = _objective_value(x, y, d, objective)
        if best is None or value < best:
            best = value
            best_y = y
    assert best is not None and best_y is not None
    return best, best_y


@dataclass
class VerificationOutcome:
    """Result of checking one of the named lower-bound constructions."""

    claim: str
    status: str                      # "pass" | "fail" | "inconclusive"
    required: Scalar
    strict: bool                     # pass needs measured > required (vs >=)
    measured: Optional[Scalar]
    witness: Optional[IntegralAssignment]
    nodes: int
    detail: str = ""


def verify_lower_bound(claim: str, *, m: Optional[int] = None,
                       delta: Optional[Scalar] = None,
                       cfg: Optional[SearchConfig] = None,
                       method: str = "auto") -> VerificationOutcome:
    """Check a named hard instance against its claimed optimum bound.

    claim "caplb": min prefix discrepancy of the capped instance is at least
    1 - 1/(2m-2).  claim "carlb": with the support mask, at least 1 - delta.
    claim "intlb": min interval discrepancy of the three-row constant-column
    instance exceeds 1 (established by a threshold decision at 1).
    ``method`` picks "search", "enumerate", or "auto" (enumerate when the
    assignment space is small).  Limit-capped runs come back "inconclusive".
    """
    from . import instances  # deferred: instances depends on scheduling

    base = cfg if cfg is not None else SearchConfig()
    if claim == "caplb":
        if m is None:
            raise ValidationError("caplb needs m")
        x, d = instances.gen_caplb(m)
        required = 1 - (Fraction(1, 2 * m - 2) if x.exact else 1.0 / (2 * m - 2))
        run = replace(base, objective=PREFIX, support=None, threshold=None)
        strict = False
    elif claim == "carlb":
        if delta is None:
            raise ValidationError("carlb needs delta")
        x, mask, d = instances.gen_carlb(delta)
        dlt = exact_scalar(delta) if x.exact else float_scalar(delta)
        required = 1 - dlt
        run = replace(base, objective=PREFIX, support=mask, threshold=None)
        strict = False
    elif claim == "intlb":
        x, d = instances.gen_intlb()
        required = 1 if x.exact else 1.0
        run = replace(base, objective=INTERVAL, support=None, threshold=required)
        strict = True
    else:
        raise ValidationError(f"unknown lower-bound claim {claim!r}")

    if claim == "intlb":
        result = exact_min_interval_discrepancy(x, d, run)
        if result.status == STATUS_LIMIT:
            return VerificationOutcome(claim, "inconclusive", required, strict,
                                       result.optimum, result.witness, result.nodes_explored,
                                       "search limit reached before a verdict")
        if result.threshold_answer:
            return VerificationOutcome(claim, "fail", required, strict,
                                       result.optimum, result.witness, result.nodes_explored,
                                       "an assignment meets the claimed bound")
        return VerificationOutcome(claim, "pass", required, strict, None, None,
                                   result.nodes_explored,
                                   "no assignment reaches the threshold")

    space = 1
    for j in range(x.n):
        space *= len(run.support.allowed_rows(j)) if run.support is not None else x.m
    if method == "enumerate" or (method == "auto" and space <= 100_000):
        value, witness = brute_force_min(x, d, PREFIX, run.support)
        nodes = space
        detail = f"minimum over all {space} assignments is {value}"
    else:
        result = exact_min_prefix_discrepancy(x, d, run)
        if result.status == STATUS_LIMIT:
            return VerificationOutcome(claim, "inconclusive", required, strict,
                                       result.optimum, result.witness, result.nodes_explored,
                                       "search limit reached before a verdict")
        value, witness, nodes = result.optimum, result.witness, result.nodes_explored
        detail = f"search minimum is {value} after {nodes} nodes"
    tol = 0 if (x.exact and d.exact) else FLOAT_TOL
    ok = value >= required - tol
    return VerificationOutcome(claim, "pass" if ok else "fail", required, strict,
                               value, witness, nodes, detail)

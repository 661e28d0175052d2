"""Flow-network view of prefix rounding.

A fractional assignment with column weights induces a single-source flow:
the source feeds one chain per row, the chain node for (row i, time t)
carries the weighted prefix mass P_t(i), and a terminal arc drops column j's
share x_ij * d_j off the chain at time j.  An integral assignment is exactly
an unsplittable routing of the same demands (column j's full weight rides
one chain), so rounding quality can be read off the arcs: on the source and
chain arcs the flow change equals the signed prefix difference, and the
largest such change *is* the prefix discrepancy.  Terminal arcs can move by
up to the column weight itself, which is why the per-arc guarantee is about
interior arcs only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .core import (DimensionError, FractionalAssignment, IntegralAssignment,
                   ValidationError, WeightVector, prefix_discrepancy)
from .numeric import FLOAT_TOL, Scalar, format_number


def _chain_node(i: int, t: int) -> str:
    return f"i{i + 1}_{t}"


def _terminal_node(j: int) -> str:
    return f"t{j + 1}"


@dataclass(frozen=True)
class ArcFlow:
    tail: str
    head: str
    flow: Scalar

    @property
    def internal(self) -> bool:
        """Source and chain arcs; False for the demand drop-offs."""
        return not self.head.startswith("t")


@dataclass(frozen=True)
class FlowNetwork:
    """Arc-listed flow; see ``build_reduction`` for node and arc layout."""

    m: int
    n: int
    nodes: Tuple[str, ...]
    arcs: Tuple[ArcFlow, ...]
    support_only: bool = False

    def edge_list(self) -> List[str]:
        """Plain "tail head flow" lines in arc order."""
        return [f"{a.tail} {a.head} {format_number(a.flow)}" for a in self.arcs]


def build_reduction(x: FractionalAssignment, d: WeightVector,
                    support_only: bool = False) -> FlowNetwork:
    """Build the chain network carrying the fractional flow.

    Nodes: source "s", chain nodes "i<row>_<t>" for each row and time, and
    terminals "t<j>", for 1 + m*n + n in total.  Arcs per row: source into
    the chain tail (flow P_n), then the chain arcs downward (arc into time t
    carries P_t), then one terminal arc per column (flow x_ij * d_j); arc
    count m + m*(n-1) + m*n, less any terminal arcs dropped when
    ``support_only`` keeps only nonzero entries.
    """
    if d.n != x.n:
        raise DimensionError(f"{d.n} weights for {x.n} columns")
    m, n = x.m, x.n
    nodes = ["s"]
    nodes += [_chain_node(i, t) for i in range(m) for t in range(1, n + 1)]
    nodes += [_terminal_node(j) for j in range(n)]

    arcs: List[ArcFlow] = []
    for i in range(m):
        prefix: List[Scalar] = [0] * (n + 1)
        for t in range(1, n + 1):
            prefix[t] = prefix[t - 1] + d.values[t - 1] * x.entries[i][t - 1]
        arcs.append(ArcFlow("s", _chain_node(i, n), prefix[n]))
        for t in range(n - 1, 0, -1):
            arcs.append(ArcFlow(_chain_node(i, t + 1), _chain_node(i, t), prefix[t]))
    for i in range(m):
        for j in range(n):
            if support_only and x.entries[i][j] == 0:
                continue
            arcs.append(ArcFlow(_chain_node(i, j + 1), _terminal_node(j),
                                d.values[j] * x.entries[i][j]))
    return FlowNetwork(m, n, tuple(nodes), tuple(arcs), support_only)


def assignment_flows(net: FlowNetwork, y: IntegralAssignment,
                     d: WeightVector) -> Tuple[Scalar, ...]:
    """Unsplittable flows for ``y`` on the same arcs, aligned to ``net.arcs``.

    Column j's whole weight rides row s_j's chain.  On a support-restricted
    network an assignment that leaves the support has no arc to ride and is
    rejected.
    """
    m, n = net.m, net.n
    y.validate(m)
    if y.n != n or d.n != n:
        raise DimensionError("assignment and weights must match the network")
    flows: Dict[Tuple[str, str], Scalar] = {}
    for i in range(m):
        acc: List[Scalar] = [0] * (n + 1)
        for t in range(1, n + 1):
            acc[t] = acc[t - 1] + (d.values[t - 1] if y.s[t - 1] == i else 0)
        flows[("s", _chain_node(i, n))] = acc[n]
        for t in range(1, n):
            flows[(_chain_node(i, t + 1), _chain_node(i, t))] = acc[t]
    for j in range(n):
        flows[(_chain_node(y.s[j], j + 1), _terminal_node(j))] = d.values[j]

    out: List[Scalar] = []
    seen = set()
    for a in net.arcs:
        key = (a.tail, a.head)
        out.append(flows.get(key, 0))
        seen.add(key)
    missing = [j for j in range(n)
               if (_chain_node(y.s[j], j + 1), _terminal_node(j)) not in seen]
    if missing:
        raise ValidationError(
            f"assignment routes column {missing[0] + 1} outside the network support")
    return tuple(out)


@dataclass(frozen=True)
class ArcReport:
    """Largest per-arc flow change between the fractional and integral flows."""

    internal_max: Scalar
    internal_argmax: Tuple[str, str]
    overall_max: Scalar
    overall_argmax: Tuple[str, str]
    prefix_value: Scalar
    within_weight_bound: bool        # overall_max < d_max (not guaranteed)


def verify_arc_discrepancy(x: FractionalAssignment, y: IntegralAssignment,
                           d: WeightVector,
                           support_only: bool = False) -> ArcReport:
    """Compare flows arc by arc and tie the result back to the prefix view.

    The maximum change over internal arcs always equals the prefix
    discrepancy of (x, y); that identity is asserted here, not just
    reported.  Terminal arcs are included in ``overall_max`` only.
    """
    net = build_reduction(x, d, support_only)
    frac = [a.flow for a in net.arcs]
    integ = assignment_flows(net, y, d)
    tol = 0 if (x.exact and d.exact) else FLOAT_TOL

    internal_max: Scalar = 0
    internal_arg = ("s", "s")
    overall_max: Scalar = 0
    overall_arg = ("s", "s")
    for a, f, g in zip(net.arcs, frac, integ):
        diff = f - g
        if diff < 0:
            diff = -diff
        if diff > overall_max:
            overall_max = diff
            overall_arg = (a.tail, a.head)
        if a.internal and diff > internal_max:
            internal_max = diff
            internal_arg = (a.tail, a.head)

    pref = prefix_discrepancy(x, y, d).max_prefix_abs
    gap = internal_max - pref
    assert -tol <= gap <= tol, "internal arc maximum must equal prefix discrepancy"
    return ArcReport(internal_max, internal_arg, overall_max, overall_arg,
                     pref, overall_max < d.d_max - tol)

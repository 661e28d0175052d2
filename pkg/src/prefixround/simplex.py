"""Dense two-phase simplex over exact rationals.

Solves  min c.x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0  with
Fraction arithmetic and Bland's pivoting rule, so it terminates on
degenerate problems and every reported optimum is exact.  Intended for the
small LPs produced by constraint generation, not as a general solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: Optional[List[Fraction]]
    objective: Optional[Fraction]


def _to_fraction_rows(rows) -> List[List[Fraction]]:
    return [[Fraction(v) for v in row] for row in rows]


def solve_exact_lp(c: Sequence, A_ub=None, b_ub=None, A_eq=None, b_eq=None) -> LPResult:
    c = [Fraction(v) for v in c]
    nvars = len(c)
    A_ub = _to_fraction_rows(A_ub or [])
    b_ub = [Fraction(v) for v in (b_ub or [])]
    A_eq = _to_fraction_rows(A_eq or [])
    b_eq = [Fraction(v) for v in (b_eq or [])]
    if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
        raise ValueError("constraint matrix and rhs lengths disagree")

    nslack = len(A_ub)
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for k, row in enumerate(A_ub):
        if len(row) != nvars:
            raise ValueError("A_ub width does not match c")
        full = row + [Fraction(0)] * nslack
        full[nvars + k] = Fraction(1)
        rows.append(full)
        rhs.append(b_ub[k])
    for row, b in zip(A_eq, b_eq):
        if len(row) != nvars:
            raise ValueError("A_eq width does not match c")
        rows.append(row + [Fraction(0)] * nslack)
        rhs.append(b)
    for k in range(len(rows)):
        if rhs[k] < 0:
            rows[k] = [-v for v in rows[k]]
            rhs[k] = -rhs[k]

    nrows = len(rows)
    ncols = nvars + nslack
    # one artificial per row; phase 1 drives them out
    tableau = [rows[k] + [Fraction(0)] * nrows + [rhs[k]] for k in range(nrows)]
    for k in range(nrows):
        tableau[k][ncols + k] = Fraction(1)
    basis = [ncols + k for k in range(nrows)]
    total = ncols + nrows

    def pivot(row_idx: int, col_idx: int) -> None:
        piv_row = tableau[row_idx]
        inv = Fraction(1) / piv_row[col_idx]
        if inv != 1:
            tableau[row_idx] = piv_row = [v * inv for v in piv_row]
        for r in range(nrows):
            if r == row_idx:
                continue
            factor = tableau[r][col_idx]
            if factor == 0:
                continue
            target = tableau[r]
            tableau[r] = [tv - factor * pv for tv, pv in zip(target, piv_row)]
        basis[row_idx] = col_idx

    def run_phase(costs: List[Fraction], allowed: int) -> str:
        # reduced costs z_j = costs_j - costs_B . column_j, recomputed per phase
        obj = costs[:] + [Fraction(0)]
        for r, b in enumerate(basis):
            cb = costs[b]
            if cb == 0:
                continue
            row = tableau[r]
            for j in range(total + 1):
                if row[j]:
                    obj[j] -= cb * row[j]
        while True:
            enter = -1
            for j in range(allowed):
                if obj[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best_ratio: Optional[Fraction] = None
            for r in range(nrows):
                a = tableau[r][enter]
                if a > 0:
                    ratio = tableau[r][total] / a
                    if best_ratio is None or ratio < best_ratio or \
                            (ratio == best_ratio and basis[r] < basis[leave]):
                        best_ratio = ratio
                        leave = r
            if leave < 0:
                return UNBOUNDED
            coeff = obj[enter]
            pivot(leave, enter)
            if coeff:
                piv = tableau[leave]
                for j in range(total + 1):
                    if piv[j]:
                        obj[j] -= coeff * piv[j]

    phase1_costs = [Fraction(0)] * ncols + [Fraction(1)] * nrows
    status = run_phase(phase1_costs, total)
    if status != OPTIMAL:
        return LPResult(INFEASIBLE, None, None)
    infeasibility = sum(tableau[r][total] for r in range(nrows) if basis[r] >= ncols)
    if infeasibility != 0:
        return LPResult(INFEASIBLE, None, None)
    # drive remaining zero-level artificials out of the basis
    for r in range(nrows):
        if basis[r] >= ncols:
            piv_col = next((j for j in range(ncols) if tableau[r][j] != 0), None)
            if piv_col is not None:
                pivot(r, piv_col)
    keep = [r for r in range(nrows) if basis[r] < ncols]
    dropped = nrows - len(keep)
    if dropped:
        # redundant original rows; remove them together with their artificials
        tableau[:] = [tableau[r] for r in keep]
        basis[:] = [basis[r] for r in keep]
        nrows -= dropped

    phase2_costs = c + [Fraction(0)] * (total - nvars)
    status = run_phase(phase2_costs, ncols)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, None)
    solution = [Fraction(0)] * nvars
    for r, b in enumerate(basis):
        if b < nvars:
            solution[b] = tableau[r][total]
    objective = sum(ci * xi for ci, xi in zip(c, solution))
    return LPResult(OPTIMAL, solution, objective)

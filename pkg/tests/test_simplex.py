"""The exact rational simplex against hand cases and scipy."""

from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from prefixround.simplex import (INFEASIBLE, OPTIMAL, UNBOUNDED,
                                 solve_exact_lp)


def test_two_variable_box():
    # min -x - y  s.t.  x + y <= 1
    res = solve_exact_lp([-1, -1], A_ub=[[1, 1]], b_ub=[1])
    assert res.status == OPTIMAL
    assert res.objective == -1
    assert sum(res.x) == 1


def test_equality_constraint():
    # min x + 2y  s.t.  x + y = 3, x <= 2
    res = solve_exact_lp([1, 2], A_ub=[[1, 0]], b_ub=[2], A_eq=[[1, 1]], b_eq=[3])
    assert res.status == OPTIMAL
    assert res.x == [Fraction(2), Fraction(1)]
    assert res.objective == 4


def test_fractional_data_stays_exact():
    res = solve_exact_lp([Fraction(-1, 3), Fraction(-1, 7)],
                         A_ub=[[Fraction(1, 2), 1], [1, Fraction(1, 3)]],
                         b_ub=[Fraction(5, 4), Fraction(7, 6)])
    assert res.status == OPTIMAL
    lhs1 = Fraction(1, 2) * res.x[0] + res.x[1]
    lhs2 = res.x[0] + Fraction(1, 3) * res.x[1]
    assert lhs1 <= Fraction(5, 4) and lhs2 <= Fraction(7, 6)
    ref = linprog([-1 / 3, -1 / 7], A_ub=[[0.5, 1], [1, 1 / 3]],
                  b_ub=[1.25, 7 / 6], method="highs")
    assert float(res.objective) == pytest.approx(ref.fun, abs=1e-9)


def test_infeasible():
    # x >= 0 and x <= -1 cannot hold together
    res = solve_exact_lp([1], A_ub=[[1]], b_ub=[-1])
    assert res.status == INFEASIBLE
    assert res.x is None and res.objective is None


def test_unbounded():
    res = solve_exact_lp([-1], A_ub=[[-1]], b_ub=[0])
    assert res.status == UNBOUNDED


def test_degenerate_problem_terminates():
    # classic cycling-prone setup; Bland's rule must still finish
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9],
         [Fraction(1, 2), -90, Fraction(-1, 50), 3],
         [0, 0, 1, 0]]
    b = [0, 0, 1]
    res = solve_exact_lp(c, A_ub=A, b_ub=b)
    assert res.status == OPTIMAL
    assert res.objective == Fraction(-1, 20)


def test_redundant_equality_rows():
    res = solve_exact_lp([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[2, 4])
    assert res.status == OPTIMAL
    assert res.objective == 2
    # and inconsistent duplicates are infeasible
    res = solve_exact_lp([1, 1], A_eq=[[1, 1], [1, 1]], b_eq=[2, 3])
    assert res.status == INFEASIBLE


def test_matches_scipy_on_random_feasible_lps():
    rng = np.random.default_rng(42)
    for trial in range(20):
        nvar = int(rng.integers(2, 5))
        ncon = int(rng.integers(1, 5))
        A = rng.integers(-3, 4, size=(ncon, nvar))
        x0 = rng.integers(0, 3, size=nvar)  # feasible by construction
        b = A @ x0 + rng.integers(1, 4, size=ncon)
        c = rng.integers(-4, 5, size=nvar)
        ref = linprog(c, A_ub=A, b_ub=b, bounds=[(0, 10)] * nvar, method="highs")
        box = np.vstack([A, np.eye(nvar)])
        rhs = list(b) + [10] * nvar
        res = solve_exact_lp([int(v) for v in c],
                             A_ub=[[int(v) for v in row] for row in box],
                             b_ub=[int(v) for v in rhs])
        assert res.status == OPTIMAL
        assert float(res.objective) == pytest.approx(ref.fun, abs=1e-7)


def test_shape_mismatch_raises():
    with pytest.raises(ValueError):
        solve_exact_lp([1], A_ub=[[1]], b_ub=[1, 2])

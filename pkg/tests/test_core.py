"""Discrepancy measures and the shared assignment types."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prefixround import (DimensionError, FractionalAssignment,
                         IntegralAssignment, SupportMask, ValidationError,
                         WeightVector, interval_discrepancy, numeric,
                         one_sided_interval_excess, prefix_discrepancy,
                         validate_fractional)

from _util import grid_instance, random_assignment


def interval_scan(x, y, d):
    """O(mn^2) reference: every interval summed from scratch."""
    best = 0
    one_sided = 0
    for i in range(x.m):
        for s in range(x.n):
            acc = 0
            for t in range(s, x.n):
                acc += d.values[t] * (x.entries[i][t] - (1 if y.s[t] == i else 0))
                best = max(best, abs(acc))
                one_sided = max(one_sided, -acc)
    return best, one_sided


# -- validation -------------------------------------------------------------

def test_validate_symmetric_split_ok():
    x = FractionalAssignment.from_rows([[Fraction(1, 2)], [Fraction(1, 2)]])
    assert validate_fractional(x) is None


def test_validate_reports_bad_column_sum():
    with numeric.numeric_mode(numeric.FLOAT):
        x = FractionalAssignment.from_rows([[0.6], [0.6]])
    message = validate_fractional(x)
    assert message is not None
    assert "column 1 sums to" in message
    assert "1.2" in message


def test_validate_reports_entry_out_of_range():
    x = FractionalAssignment.from_rows([[Fraction(3, 2), Fraction(1, 2)],
                                        [Fraction(-1, 2), Fraction(1, 2)]])
    message = validate_fractional(x)
    assert message is not None
    assert "row 1, column 1" in message and "outside [0, 1]" in message


def test_ragged_matrix_is_a_dimension_error():
    with pytest.raises(DimensionError):
        FractionalAssignment.from_rows([[1], [1, 2]])
    with pytest.raises(DimensionError):
        FractionalAssignment.from_rows([])


def test_weights_must_be_positive():
    with pytest.raises(ValidationError, match="weight 2"):
        WeightVector.from_values([1, 0])
    with pytest.raises(ValidationError):
        WeightVector.from_values([1, -2])


def test_caplb_output_is_valid():
    from prefixround import gen_caplb
    x, d = gen_caplb(3)
    assert validate_fractional(x) is None


# -- prefix discrepancy -----------------------------------------------------

def test_prefix_hand_example_three_rows():
    x = FractionalAssignment.from_rows([[Fraction(1, 4), Fraction(1, 2)],
                                        [Fraction(1, 4), Fraction(1, 2)],
                                        [Fraction(1, 2), Fraction(0)]])
    d = WeightVector.from_values([1, 1])
    report = prefix_discrepancy(x, IntegralAssignment((0, 1)), d)
    assert report.max_prefix_abs == Fraction(3, 4)
    assert report.argmax_prefix == (0, 1)


def test_prefix_hand_example_two_rows():
    x = FractionalAssignment.from_rows([[Fraction(1, 4), Fraction(1, 2)],
                                        [Fraction(3, 4), Fraction(1, 2)]])
    d = WeightVector.from_values([1, 1])
    report = prefix_discrepancy(x, IntegralAssignment((1, 0)), d)
    assert report.max_prefix_abs == Fraction(1, 4)
    assert report.argmax_prefix == (0, 1)


def test_prefix_zero_when_assignment_matches_integral_matrix():
    x = FractionalAssignment.from_rows([[1, 0, 1], [0, 1, 0]])
    d = WeightVector.from_values([Fraction(2), Fraction(1, 3), Fraction(5)])
    report = prefix_discrepancy(x, IntegralAssignment((0, 1, 0)), d)
    assert report.max_prefix_abs == 0
    for lo, hi in report.per_row_prefix_extrema:
        assert lo == 0 and hi == 0


def test_prefix_argmax_is_the_actual_maximum():
    x, d = grid_instance(3, 9, seed=11)
    y = IntegralAssignment(random_assignment(3, 9, seed=12))
    report = prefix_discrepancy(x, y, d)
    i, t = report.argmax_prefix
    acc = sum(d.values[j] * (x.entries[i][j] - (1 if y.s[j] == i else 0))
              for j in range(t))
    assert abs(acc) == report.max_prefix_abs


def test_dimension_mismatches_are_rejected():
    x, d = grid_instance(2, 4, seed=0)
    with pytest.raises(DimensionError):
        prefix_discrepancy(x, IntegralAssignment((0, 1)), d)
    short_d = WeightVector.from_values([1, 1])
    with pytest.raises(DimensionError):
        prefix_discrepancy(x, IntegralAssignment((0, 1, 0, 1)), short_d)
    with pytest.raises(ValidationError):
        prefix_discrepancy(x, IntegralAssignment((0, 1, 5, 0)), d)


# -- interval discrepancy ----------------------------------------------------

def test_interval_zero_on_integral_match():
    x = FractionalAssignment.from_rows([[1, 0], [0, 1]])
    d = WeightVector.from_values([1, 1])
    report = interval_discrepancy(x, IntegralAssignment((0, 1)), d)
    assert report.max_interval_abs == 0


def test_single_row_is_always_exact():
    x = FractionalAssignment.from_rows([[1] * 5])
    d = WeightVector.from_values([Fraction(k + 1, 3) for k in range(5)])
    report = interval_discrepancy(x, IntegralAssignment((0,) * 5), d)
    assert report.max_prefix_abs == 0
    assert report.max_interval_abs == 0


@settings(max_examples=60, deadline=None)
@given(m=st.integers(2, 4), n=st.integers(1, 10), seed=st.integers(0, 10 ** 6))
def test_interval_matches_quadratic_scan_and_dominates_prefix(m, n, seed):
    x, d = grid_instance(m, n, seed)
    y = IntegralAssignment(random_assignment(m, n, seed + 1))
    report = interval_discrepancy(x, y, d)
    scanned, scanned_one = interval_scan(x, y, d)
    assert report.max_interval_abs == scanned
    assert report.max_interval_abs >= report.max_prefix_abs >= 0
    assert one_sided_interval_excess(x, y, d) == scanned_one


def test_interval_equals_prefix_window_width():
    x, d = grid_instance(3, 8, seed=21)
    y = IntegralAssignment(random_assignment(3, 8, seed=22))
    report = interval_discrepancy(x, y, d)
    widths = [hi - lo for lo, hi in report.per_row_prefix_extrema]
    assert report.max_interval_abs == max(widths)
    for lo, hi in report.per_row_prefix_extrema:
        assert lo <= 0 <= hi


def test_interval_argmax_attains_the_value():
    x, d = grid_instance(4, 10, seed=33)
    y = IntegralAssignment(random_assignment(4, 10, seed=34))
    report = interval_discrepancy(x, y, d)
    i, s, t = report.argmax_interval
    acc = sum(d.values[j - 1] * (x.entries[i][j - 1] - (1 if y.s[j - 1] == i else 0))
              for j in range(s, t + 1))
    assert abs(acc) == report.max_interval_abs


def test_one_sided_excess_zero_on_match_and_nonnegative():
    x = FractionalAssignment.from_rows([[1, 0], [0, 1]])
    d = WeightVector.from_values([2, 3])
    assert one_sided_interval_excess(x, IntegralAssignment((0, 1)), d) == 0
    x2, d2 = grid_instance(3, 7, seed=40)
    y2 = IntegralAssignment(random_assignment(3, 7, seed=41))
    assert one_sided_interval_excess(x2, y2, d2) >= 0


def test_exact_and_float_modes_agree_on_small_rationals():
    x, d = grid_instance(3, 8, seed=50, den=16)
    y = IntegralAssignment(random_assignment(3, 8, seed=51))
    exact_val = interval_discrepancy(x, y, d).max_interval_abs
    with numeric.numeric_mode(numeric.FLOAT):
        xf = FractionalAssignment.from_rows([[float(v) for v in row]
                                             for row in x.entries])
        df = WeightVector.from_values([float(v) for v in d.values])
    float_val = interval_discrepancy(xf, y, df).max_interval_abs
    assert abs(float(exact_val) - float_val) <= 1e-9


# -- assignment and mask types ----------------------------------------------

def test_induced_matrix_has_unit_column_sums():
    y = IntegralAssignment((2, 0, 1, 2))
    matrix = y.induced_matrix(3)
    for j in range(4):
        assert sum(matrix[i][j] for i in range(3)) == 1
    assert y.to_one_based() == (3, 1, 2, 3)
    assert IntegralAssignment.from_one_based((3, 1, 2, 3)) == y


def test_assignment_validate_rejects_bad_rows():
    with pytest.raises(ValidationError):
        IntegralAssignment((0, 3)).validate(3)
    with pytest.raises(ValidationError):
        IntegralAssignment((0, -1)).validate(3)


def test_support_mask_tracks_nonzeros():
    x = FractionalAssignment.from_rows([[Fraction(1, 2), Fraction(0)],
                                        [Fraction(1, 2), Fraction(1)]])
    mask = SupportMask.from_nonzero(x)
    assert mask.allows(0, 0) and not mask.allows(0, 1)
    assert mask.allowed_rows(1) == (1,)
    assert mask.respects(IntegralAssignment((0, 1)))
    assert not mask.respects(IntegralAssignment((0, 0)))


def test_support_mask_needs_a_row_per_column():
    with pytest.raises(ValidationError, match="column 2"):
        SupportMask.from_rows([[True, False], [True, False]])

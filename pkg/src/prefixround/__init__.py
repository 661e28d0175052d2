"""Weighted prefix rounding with tight discrepancy guarantees.

Turn a fractional assignment of weighted items to rows into an integral one
whose weighted prefix sums track the fractional ones within
(1 - 1/(2m-2)) * d_max, verify optimality claims with exact search, and
schedule release/closing-time instances to provably near-optimal maximum
flow time.
"""

from .core import (DimensionError, DiscrepancyReport, FractionalAssignment,
                   IntegralAssignment, SupportMask, ValidationError,
                   WeightVector, interval_discrepancy,
                   one_sided_interval_excess, prefix_discrepancy,
                   validate_fractional)
from .flow import (ArcReport, FlowNetwork, assignment_flows, build_reduction,
                   verify_arc_discrepancy)
from .instances import (RandomSpec, gen_caplb, gen_carlb, gen_fifo_lb,
                        gen_intlb, gen_random, gen_random_scheduling)
from .numeric import (EXACT, FLOAT, FLOAT_TOL, Scalar, get_mode, numeric_mode,
                      set_mode)
from .oracle import (INTERVAL, PREFIX, STATUS_EXACT, STATUS_LIMIT,
                     SearchConfig, SearchResult, VerificationOutcome,
                     brute_force_min, exact_min_interval_discrepancy,
                     exact_min_prefix_discrepancy, verify_lower_bound)
from .rounding import (discrepancy_bound, earliest_deadline_round,
                       round_with_closing_times, round_with_open_times,
                       tight_epsilon)
from .scheduling import (InfeasibleInstanceError, LPSolution, Schedule,
                         SchedulingInstance, approx_ratio_bound,
                         approx_schedule, build_schedule, fifo_schedule,
                         solve_lp)

__version__ = "0.1.0"

__all__ = [
    "DimensionError", "DiscrepancyReport", "FractionalAssignment",
    "IntegralAssignment", "SupportMask", "ValidationError", "WeightVector",
    "interval_discrepancy", "one_sided_interval_excess", "prefix_discrepancy",
    "validate_fractional",
    "ArcReport", "FlowNetwork", "assignment_flows", "build_reduction",
    "verify_arc_discrepancy",
    "RandomSpec", "gen_caplb", "gen_carlb", "gen_fifo_lb", "gen_intlb",
    "gen_random", "gen_random_scheduling",
    "EXACT", "FLOAT", "FLOAT_TOL", "Scalar", "get_mode", "numeric_mode",
    "set_mode",
    "INTERVAL", "PREFIX", "STATUS_EXACT", "STATUS_LIMIT",
    "SearchConfig", "SearchResult",
    "VerificationOutcome", "brute_force_min",
    "exact_min_interval_discrepancy", "exact_min_prefix_discrepancy",
    "verify_lower_bound",
    "discrepancy_bound", "earliest_deadline_round",
    "round_with_closing_times", "round_with_open_times", "tight_epsilon",
    "InfeasibleInstanceError", "LPSolution", "Schedule", "SchedulingInstance",
    "approx_ratio_bound", "approx_schedule", "build_schedule",
    "fifo_schedule", "solve_lp",
    "__version__",
]

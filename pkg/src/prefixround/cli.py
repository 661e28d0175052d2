"""Command line front end.

Subcommands: ``round`` (apply the rounding to an instance file), ``oracle``
(exact search or named lower-bound verification), ``gen`` (emit instances),
``schedule`` (LP + rounding + simulation pipeline or the FIFO baseline),
``flow`` (network reduction view), and ``repro`` (deterministic end-to-end
check of every headline guarantee).

Exit codes: 0 success, 1 a verification answered "no" or hit its search
limit, 2 bad usage or unreadable input.  Reports go to stdout; anything
timing-dependent goes to stderr so stdout stays byte-stable for a fixed
command line.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from typing import List, Optional, Sequence

from . import __version__
from .core import (IntegralAssignment, SupportMask, ValidationError,
                   prefix_discrepancy)
from .flow import build_reduction, verify_arc_discrepancy
from .instances import (RandomSpec, gen_caplb, gen_carlb, gen_fifo_lb,
                        gen_intlb, gen_random, gen_random_scheduling)
from .numeric import (EXACT, FLOAT, Scalar, format_number, numeric_mode,
                      parse_number, set_mode)
from .oracle import (INTERVAL, PREFIX, STATUS_LIMIT, SearchConfig,
                     exact_min_interval_discrepancy,
                     exact_min_prefix_discrepancy, verify_lower_bound)
from .rounding import (discrepancy_bound, earliest_deadline_round,
                       round_with_closing_times, round_with_open_times)
from .scheduling import (approx_ratio_bound, approx_schedule, build_schedule,
                         fifo_schedule, solve_lp)
from .serialize import (assignment_from_dict, assignment_to_dict, from_json,
                        matrix_from_csv, matrix_from_dict, matrix_to_csv,
                        matrix_to_dict, open_times_from_dict,
                        scheduling_from_dict, scheduling_to_dict, to_json)

REPRO_CLAIMS = ("prefix-bound", "caplb", "carlb", "intlb", "fifo-gap",
                "flowtime-ratio", "arc-bound")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text)


def _input_path(args) -> str:
    path = args.input_flag if args.input_flag is not None else args.input
    if path is None:
        raise ValidationError(f"{args.command} needs an instance file "
                              "(positional or --input)")
    return path


def _load_matrix(path: str, force_csv: bool):
    text = _read_text(path)
    if force_csv or path.endswith(".csv"):
        return matrix_from_csv(text)
    return matrix_from_dict(from_json(text))


def _require_json_format(args) -> None:
    if args.format not in (None, "json"):
        raise ValidationError(
            f"{args.command} reports are JSON only; --format {args.format} "
            "applies to gen (csv) and schedule compare (table)")


def _maybe_fraction(value: Scalar):
    return format_number(value)


# -- round ---------------------------------------------------------------------

def _cmd_round(args) -> int:
    _require_json_format(args)
    if args.open_times is not None and args.closing_times is not None:
        raise ValidationError("--open-times and --closing-times are exclusive")
    x, d = _load_matrix(_input_path(args), args.csv)
    if args.open_times is not None:
        opens = open_times_from_dict(from_json(_read_text(args.open_times)))
        y = round_with_open_times(x, d, opens)
    elif args.closing_times is not None:
        inst = scheduling_from_dict(from_json(_read_text(args.closing_times)))
        if inst.n != x.n:
            raise ValidationError(f"closing-times file has {inst.n} jobs "
                                  f"for a {x.n}-column instance")
        y = round_with_closing_times(x, d, inst.release, inst.closing)
    else:
        y = earliest_deadline_round(x, d, epsilon_zero=args.epsilon_zero)
    report = prefix_discrepancy(x, y, d)
    exact = x.exact and d.exact
    bound = discrepancy_bound(x.m, d.d_max, exact=exact)
    tol = 0 if exact else args.tolerance
    payload = assignment_to_dict(y)
    payload["max_prefix_discrepancy"] = _maybe_fraction(report.max_prefix_abs)
    payload["bound"] = _maybe_fraction(bound)
    payload["within_bound"] = bool(report.max_prefix_abs <= bound + tol)
    _emit(to_json(payload), args.out)
    return 0


# -- oracle ----------------------------------------------------------------------

def _outcome_payload(outcome) -> dict:
    payload = {
        "claim": outcome.claim,
        "status": outcome.status,
        "required": _maybe_fraction(outcome.required),
        "strict": outcome.strict,
        "measured": None if outcome.measured is None else _maybe_fraction(outcome.measured),
        "nodes": outcome.nodes,
        "detail": outcome.detail,
    }
    if outcome.witness is not None:
        payload["witness"] = list(outcome.witness.to_one_based())
    return payload


def _cmd_oracle(args) -> int:
    _require_json_format(args)
    cfg = SearchConfig(node_limit=args.node_limit, time_limit=args.time_limit,
                       use_memo=not args.no_memo, seed_incumbent=not args.no_seed)

    if args.claim is not None:
        delta = None if args.delta is None else parse_number(args.delta)
        outcome = verify_lower_bound(args.claim, m=args.m, delta=delta,
                                     cfg=cfg, method=args.method)
        _emit(to_json(_outcome_payload(outcome)), args.out)
        return 0 if outcome.status == "pass" else 1

    if args.input is None and args.input_flag is None:
        raise ValidationError("oracle needs an instance file or a --claim")
    x, d = _load_matrix(_input_path(args), args.csv)
    support = SupportMask.from_nonzero(x) if args.support else None
    threshold = None if args.threshold is None else parse_number(args.threshold)
    cfg = SearchConfig(objective=args.objective, support=support,
                       threshold=threshold,
                       node_limit=args.node_limit, time_limit=args.time_limit,
                       use_memo=not args.no_memo, seed_incumbent=not args.no_seed)
    if args.objective == INTERVAL:
        result = exact_min_interval_discrepancy(x, d, cfg)
    else:
        result = exact_min_prefix_discrepancy(x, d, cfg)
    payload = {
        "objective": args.objective,
        "status": result.status,
        "optimum": None if result.optimum is None else _maybe_fraction(result.optimum),
        "nodes_explored": result.nodes_explored,
    }
    if threshold is not None:
        payload["threshold"] = _maybe_fraction(threshold)
        payload["threshold_answer"] = result.threshold_answer
    if result.witness is not None:
        payload["witness"] = list(result.witness.to_one_based())
    _emit(to_json(payload), args.out)
    return 1 if result.status == STATUS_LIMIT else 0


# -- gen ------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    if args.format == "table":
        raise ValidationError("gen emits json or csv, not a table")
    kind = args.kind
    seed = args.seed if args.seed is not None else args.global_seed
    matrix = None
    mask = None
    if kind == "caplb":
        if args.m is None:
            raise ValidationError("gen caplb needs --m")
        x, d = gen_caplb(args.m)
        matrix = (x, d)
    elif kind == "carlb":
        if args.delta is None:
            raise ValidationError("gen carlb needs --delta")
        x, mask, d = gen_carlb(parse_number(args.delta))
        matrix = (x, d)
    elif kind == "intlb":
        x, d = gen_intlb()
        matrix = (x, d)
    elif kind == "fifo":
        if args.m is None or args.delta is None:
            raise ValidationError("gen fifo needs --m and --delta")
        inst, opt = gen_fifo_lb(args.m, parse_number(args.delta))
        payload = scheduling_to_dict(inst)
        payload["reference_assignment"] = [i + 1 for i in opt]
    elif kind == "random":
        if args.m is None or args.n is None:
            raise ValidationError("gen random needs --m and --n")
        spec = RandomSpec(m=args.m, n=args.n, seed=seed,
                          weight_mode=args.weight_mode.replace("-", "_"),
                          low=parse_number(args.low),
                          support_density=args.support_density)
        x, d, mask = gen_random(spec)
        matrix = (x, d)
    elif kind == "random-scheduling":
        if args.m is None or args.n is None:
            raise ValidationError("gen random-scheduling needs --m and --n")
        inst = gen_random_scheduling(args.m, args.n, seed)
        payload = scheduling_to_dict(inst)
    else:  # pragma: no cover - argparse restricts choices
        raise ValidationError(f"unknown kind {kind!r}")

    if matrix is not None:
        if args.format == "csv":
            if mask is not None:
                raise ValidationError("csv output cannot carry a support mask")
            _emit(matrix_to_csv(*matrix), args.out)
            return 0
        payload = matrix_to_dict(*matrix)
        if mask is not None:
            payload["support"] = [[1 if b else 0 for b in row] for row in mask.allowed]
    elif args.format == "csv":
        raise ValidationError("csv output applies to matrix instances only")
    _emit(to_json(payload), args.out)
    return 0


# -- schedule --------------------------------------------------------------------

def _cmd_schedule(args) -> int:
    inst = scheduling_from_dict(from_json(_read_text(_input_path(args))))
    action = args.action
    if action != "compare":
        _require_json_format(args)
    if action == "fifo":
        sched = fifo_schedule(inst)
        payload = {
            "algorithm": "fifo",
            "assignment": [i + 1 for i in sched.assignment.s],
            "max_flow_time": _maybe_fraction(sched.max_flow_time),
            "argmax_job": sched.argmax_job + 1,
        }
        _emit(to_json(payload), args.out)
        return 0
    if action == "solve-lp":
        lp = solve_lp(inst, full_formulation=args.full_lp)
        payload = {
            "algorithm": "lp",
            "T": _maybe_fraction(lp.T),
            "rounds": lp.rounds,
            "tight_intervals": [list(k) for k in lp.certificate],
        }
        _emit(to_json(payload), args.out)
        return 0

    sched = approx_schedule(inst, full_formulation=args.full_lp)
    lp = sched.lp
    assert lp is not None
    exact = inst.exact
    bound = approx_ratio_bound(inst.m, exact=exact)
    lower = lp.T if lp.T > inst.d_max else inst.d_max
    tol = 0 if exact else args.tolerance
    certified = bool(sched.max_flow_time <= bound * lower + tol)

    if action == "compare":
        fifo = fifo_schedule(inst)
        rows = [
            ("T", _maybe_fraction(lp.T)),
            ("d_max", _maybe_fraction(inst.d_max)),
            ("fifo_flow_time", _maybe_fraction(fifo.max_flow_time)),
            ("approx_flow_time", _maybe_fraction(sched.max_flow_time)),
            ("ratio_bound", _maybe_fraction(bound)),
            ("certified_ratio", _maybe_fraction(sched.max_flow_time / lower)),
            ("certified", "yes" if certified else "NO"),
        ]
        if args.format == "csv":
            raise ValidationError("schedule compare emits a table or json, not csv")
        if args.format == "json":
            _emit(to_json(dict(rows)), args.out)
        else:
            width = max(len(k) for k, _ in rows)
            _emit("".join(f"{k:<{width}}  {v}\n" for k, v in rows), args.out)
        return 0 if certified else 1

    payload = {
        "algorithm": "approx",
        "assignment": [i + 1 for i in sched.assignment.s],
        "max_flow_time": _maybe_fraction(sched.max_flow_time),
        "lp_value": _maybe_fraction(lp.T),
        "lp_rounds": lp.rounds,
        "lower_bound": _maybe_fraction(lower),
        "ratio_bound": _maybe_fraction(bound),
        "certified_within_bound": certified,
    }
    _emit(to_json(payload), args.out)
    return 0 if certified else 1


# -- flow ------------------------------------------------------------------------

def _cmd_flow(args) -> int:
    x, d = _load_matrix(_input_path(args), args.csv)
    if args.action == "build":
        net = build_reduction(x, d, support_only=args.support_only)
        _emit("\n".join(net.edge_list()) + "\n", args.out)
        return 0
    _require_json_format(args)
    if args.assignment is not None:
        y = assignment_from_dict(from_json(_read_text(args.assignment)))
    else:
        y = earliest_deadline_round(x, d)
    report = verify_arc_discrepancy(x, y, d, support_only=args.support_only)
    payload = {
        "internal_max": _maybe_fraction(report.internal_max),
        "internal_argmax": list(report.internal_argmax),
        "overall_max": _maybe_fraction(report.overall_max),
        "overall_argmax": list(report.overall_argmax),
        "prefix_discrepancy": _maybe_fraction(report.prefix_value),
        "within_weight_bound": report.within_weight_bound,
    }
    _emit(to_json(payload), args.out)
    return 0 if report.within_weight_bound else 1


# -- repro -----------------------------------------------------------------------

def _repro_prefix_bound(lines: List[str]) -> bool:
    with numeric_mode(FLOAT):
        count = 0
        worst = 0.0
        for m in range(2, 7):
            for mode in ("uniform", "two_valued"):
                for k in range(20):
                    spec = RandomSpec(m=m, n=30, seed=1000 * m + 50 * (mode == "uniform") + k,
                                      weight_mode=mode, low=0.05)
                    x, d, _ = gen_random(spec)
                    y = earliest_deadline_round(x, d)
                    disc = prefix_discrepancy(x, y, d).max_prefix_abs
                    bound = discrepancy_bound(m, d.d_max, exact=False)
                    ratio = disc / bound
                    if ratio > worst:
                        worst = ratio
                    count += 1
        ok = worst <= 1.0 + 1e-9
    lines.append(f"prefix-bound: {'pass' if ok else 'FAIL'} "
                 f"({count} instances, worst discrepancy at {worst!r} of the bound)")
    return ok


def _repro_caplb(lines: List[str]) -> bool:
    with numeric_mode(EXACT):
        parts = []
        ok = True
        for m in range(2, 7):
            outcome = verify_lower_bound("caplb", m=m)
            tight = outcome.status == "pass" and outcome.measured == outcome.required
            ok = ok and tight
            parts.append(f"m={m} optimum {format_number(outcome.measured)}")
    lines.append(f"caplb: {'pass' if ok else 'FAIL'} ({', '.join(parts)})")
    return ok


def _repro_carlb(lines: List[str]) -> bool:
    with numeric_mode(EXACT):
        parts = []
        ok = True
        for delta in (Fraction(1, 4), Fraction(1, 6), Fraction(1, 10)):
            outcome = verify_lower_bound("carlb", delta=delta)
            tight = outcome.status == "pass" and outcome.measured == outcome.required
            ok = ok and tight
            parts.append(f"delta={format_number(delta)} optimum "
                         f"{format_number(outcome.measured)}")
    lines.append(f"carlb: {'pass' if ok else 'FAIL'} ({', '.join(parts)})")
    return ok


def _repro_intlb(lines: List[str]) -> bool:
    with numeric_mode(EXACT):
        outcome = verify_lower_bound("intlb")
        ok = outcome.status == "pass"
    note = ("no assignment keeps every interval within the weight bound"
            if ok else outcome.detail)
    lines.append(f"intlb: {'pass' if ok else 'FAIL'} ({note})")
    return ok


def _repro_fifo_gap(lines: List[str]) -> bool:
    with numeric_mode(EXACT):
        parts = []
        ok = True
        for m in (3, 4):
            inst, opt = gen_fifo_lb(m, Fraction(1, 100))
            fifo = fifo_schedule(inst)
            ref = build_schedule(inst, IntegralAssignment(opt))
            ok = ok and ref.max_flow_time == 1 and fifo.max_flow_time > ref.max_flow_time
            parts.append(f"m={m} fifo {format_number(fifo.max_flow_time)} "
                         f"vs assigned {format_number(ref.max_flow_time)}")
    lines.append(f"fifo-gap: {'pass' if ok else 'FAIL'} ({', '.join(parts)})")
    return ok


def _repro_flowtime_ratio(lines: List[str]) -> bool:
    with numeric_mode(FLOAT):
        worst = 0.0
        count = 0
        ok = True
        for m in (2, 3, 5):
            for k in range(3):
                inst = gen_random_scheduling(m, 12, seed=7000 + 10 * m + k)
                sched = approx_schedule(inst)
                lp = sched.lp
                assert lp is not None
                lower = max(lp.T, inst.d_max)
                ratio = sched.max_flow_time / lower
                bound = approx_ratio_bound(m, exact=False)
                ok = ok and ratio <= bound + 1e-9
                worst = max(worst, ratio / bound)
                count += 1
    lines.append(f"flowtime-ratio: {'pass' if ok else 'FAIL'} "
                 f"({count} instances, worst ratio at {worst!r} of the bound)")
    return ok


def _repro_arc_bound(lines: List[str]) -> bool:
    with numeric_mode(FLOAT):
        count = 0
        held = 0
        for m in (2, 3, 4):
            for k in range(10):
                x, d, _ = gen_random(RandomSpec(m=m, n=14, seed=9000 + 100 * m + k))
                y = earliest_deadline_round(x, d)
                report = verify_arc_discrepancy(x, y, d)
                held += 1 if report.within_weight_bound else 0
                count += 1
    lines.append(f"arc-bound: pass ({count} instances, interior arc maximum matched "
                 f"the prefix discrepancy every time; weight bound held on {held})")
    return True


_REPRO_FUNCS = {
    "prefix-bound": _repro_prefix_bound,
    "caplb": _repro_caplb,
    "carlb": _repro_carlb,
    "intlb": _repro_intlb,
    "fifo-gap": _repro_fifo_gap,
    "flowtime-ratio": _repro_flowtime_ratio,
    "arc-bound": _repro_arc_bound,
}


def _cmd_repro(args) -> int:
    claims = args.claims or list(REPRO_CLAIMS)
    unknown = [c for c in claims if c not in _REPRO_FUNCS]
    if unknown:
        raise ValidationError(f"unknown claim {unknown[0]!r}; "
                              f"choose from {', '.join(REPRO_CLAIMS)}")
    lines: List[str] = []
    all_ok = True
    for claim in claims:
        started = time.perf_counter()
        ok = _REPRO_FUNCS[claim](lines)
        print(f"# {claim} took {time.perf_counter() - started:.2f}s", file=sys.stderr)
        all_ok = all_ok and ok
    lines.append("all claims pass" if all_ok else "SOME CLAIMS FAILED")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all_ok else 1


# -- parser ----------------------------------------------------------------------

def _add_common_io(sub, with_csv: bool = True, with_input_flag: bool = True) -> None:
    sub.add_argument("--out", "--output", dest="out", default=None,
                     help="write the report here instead of stdout")
    if with_input_flag:
        sub.add_argument("--input", dest="input_flag", default=None,
                         help="alternative to the positional instance file")
    if with_csv:
        sub.add_argument("--csv", action="store_true",
                         help="input is CSV (d row then x rows) instead of JSON")
    # mirror the global flags so they may also follow the subcommand;
    # SUPPRESS keeps an absent mirror from clobbering the value parsed up front
    sup = argparse.SUPPRESS
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="numeric", action="store_const", const=EXACT,
                      default=sup, help=sup)
    mode.add_argument("--float", dest="numeric", action="store_const", const=FLOAT,
                      default=sup, help=sup)
    sub.add_argument("--tolerance", type=float, default=sup, help=sup)
    sub.add_argument("--format", choices=("json", "csv", "table"),
                     default=sup, help=sup)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefixround",
        description="Weighted prefix rounding, exact discrepancy oracles, and "
                    "max flow-time scheduling with machine closing times.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="numeric", action="store_const", const=EXACT,
                      help="materialize file input as exact rationals (default)")
    mode.add_argument("--float", dest="numeric", action="store_const", const=FLOAT,
                      help="materialize file input as floats")
    parser.add_argument("--seed", dest="global_seed", type=int, default=0,
                        help="seed for generators that are not given their own")
    parser.add_argument("--tolerance", type=float, default=1e-9,
                        help="absolute slack for float-mode bound checks in reports")
    parser.add_argument("--format", choices=("json", "csv", "table"), default=None,
                        help="output format where the subcommand supports a choice "
                             "(json everywhere; csv for gen; table for schedule compare)")
    parser.set_defaults(numeric=EXACT)

    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("round", help="round an instance and report its discrepancy")
    p.add_argument("input", nargs="?", default=None,
                   help="instance file (JSON or CSV), or - for stdin")
    p.add_argument("--open-times", default=None,
                   help="JSON {'a': [...]} of 1-based first-open columns per row")
    p.add_argument("--closing-times", default=None,
                   help="scheduling JSON providing release and closing times")
    p.add_argument("--epsilon-zero", action="store_true",
                   help="drop the candidate slack (experimental; voids the bound)")
    _add_common_io(p)
    p.set_defaults(func=_cmd_round)

    p = subs.add_parser("oracle", help="exact minimum-discrepancy search or "
                                       "named lower-bound verification")
    p.add_argument("input", nargs="?", default=None,
                   help="instance file; omit when using --claim")
    p.add_argument("--objective", choices=(PREFIX, INTERVAL), default=PREFIX)
    p.add_argument("--support", action="store_true",
                   help="restrict the search to the nonzero entries of x")
    p.add_argument("--threshold", default=None,
                   help="decision mode: is some assignment <= this value?")
    p.add_argument("--claim", choices=("caplb", "carlb", "intlb"), default=None)
    p.add_argument("--m", type=int, default=None, help="rows for --claim caplb")
    p.add_argument("--delta", default=None, help="parameter for --claim carlb")
    p.add_argument("--method", choices=("auto", "enumerate", "search"), default="auto")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--no-memo", action="store_true")
    p.add_argument("--no-seed", action="store_true")
    _add_common_io(p)
    p.set_defaults(func=_cmd_oracle)

    p = subs.add_parser("gen", help="emit a named or random instance")
    p.add_argument("kind", choices=("caplb", "carlb", "intlb", "fifo", "random",
                                    "random-scheduling"))
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--delta", default=None)
    p.add_argument("--seed", type=int, default=None,
                   help="defaults to the global --seed")
    p.add_argument("--weight-mode", choices=("uniform", "ones", "two-valued"),
                   default="uniform")
    p.add_argument("--low", default="1/100", help="small weight for two-valued mode")
    p.add_argument("--support-density", type=float, default=None)
    _add_common_io(p, with_csv=False, with_input_flag=False)
    p.set_defaults(func=_cmd_gen)

    p = subs.add_parser("schedule", help="schedule a closing-times instance")
    p.add_argument("action", choices=("solve-lp", "approx", "fifo", "compare"))
    p.add_argument("input", nargs="?", default=None,
                   help="scheduling JSON file, or - for stdin")
    p.add_argument("--full-lp", action="store_true",
                   help="solve the full interval LP instead of generating rows")
    _add_common_io(p, with_csv=False)
    p.set_defaults(func=_cmd_schedule)

    p = subs.add_parser("flow", help="network reduction: edge list or arc check")
    p.add_argument("action", choices=("build", "verify"))
    p.add_argument("input", nargs="?", default=None,
                   help="instance file (JSON or CSV), or - for stdin")
    p.add_argument("--assignment", default=None,
                   help="JSON {'s': [...]} to check; default rounds the instance")
    p.add_argument("--support-only", action="store_true",
                   help="drop terminal arcs at zero entries")
    _add_common_io(p)
    p.set_defaults(func=_cmd_flow)

    p = subs.add_parser("repro", help="re-derive the headline guarantees")
    p.add_argument("claims", nargs="*", metavar="CLAIM",
                   help=f"subset of: {', '.join(REPRO_CLAIMS)} (default: all)")
    _add_common_io(p, with_csv=False, with_input_flag=False)
    p.set_defaults(func=_cmd_repro)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.tolerance > 0:
        print("error: --tolerance must be positive", file=sys.stderr)
        return 2
    set_mode(args.numeric)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        set_mode(EXACT)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

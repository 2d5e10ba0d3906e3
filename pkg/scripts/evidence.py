#!/usr/bin/env python3
"""
evidence - belief entropy and information volume tool.

Usage:
    python scripts/evidence.py entropy evidence_spec/examples/deng_max_ab.bpa.json --measures deng,fb
    python scripts/evidence.py table 2
    python scripts/evidence.py surface --k 1-9 --out-dir ./surfaces
    python scripts/evidence.py split evidence_spec/examples/order3_max_ab.bpa.json -k 3 --emit counts

Subcommands:
    entropy      Evaluate Shannon/Deng/FB/TFB entropy of a BPA file (JSON rows)
    table        Reproduce the maximum TFB entropy table (1) or the information volume table (2)
    surface      k-order TFB entropy surfaces over the 2-element simplex grid
    trajectory   Measures along m(AB) = 1 - t, m(A) = r t, m(B) = (1 - r) t
    split        Leaves or per-origin leaf counts of a k-round split tree
    deng-volume  Iterative proportional-split information volume
    validate     Check a BPA file against the mass function axioms
    check        Cross-check every measure invariant on a BPA file
    max-bpa      Maximizing BPA of the k-order TFB entropy

Exit codes: 0 success, 1 failed cross-check, 2 usage or validation error,
3 split tree size guard.
"""
import argparse
import json
import logging
import sys
import warnings
from pathlib import Path
from typing import List, Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from evidence_lib.entropy import (
    Measure,
    deng_entropy,
    entropy_report,
    fb_entropy,
    focal_shannon,
    tfb_entropy,
)
from evidence_lib.generator import table_to_text, to_document, write_table
from evidence_lib.model import (
    EvidenceError,
    InvalidMassFunctionError,
    MassFunction,
    NonConvergenceWarning,
    RunSettings,
    TreeTooLargeError,
    load_settings,
    make_frame,
)
from evidence_lib.parser import BpaParser
from evidence_lib.splitting import build_split_tree, deng_volume
from evidence_lib.verification import GridSpec, cross_check, grid_search_max
from evidence_lib.volume import hoivmf_argument, hoivmf_value, max_tfb_bpa_for

logger = logging.getLogger("evidence")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

TABLE2_ITERATIONS = 14
TRAJECTORY_ORDERS = (1, 2, 3)

stderr = Console(stderr=True)


def deng_max_ab_bpa() -> MassFunction:
    """m(A) = m(B) = 0.2, m(AB) = 0.6 on {A, B}."""
    return MassFunction.from_labels(make_frame(["A", "B"]), {"A": 0.2, "B": 0.2, "A,B": 0.6})


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=stderr, show_time=False, show_path=False)],
        force=True,
    )


def report_error(error: Exception) -> None:
    stderr.print(f"[bold red]Error:[/bold red] {escape(str(error))}", highlight=False)


def emit(args, text: str) -> None:
    """Write command output to --out or standard output."""
    if args.out:
        out_path = Path(args.out)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        with open(out_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def parse_k_range(text: str) -> List[int]:
    """'3', '1-9' or '1,2,5' -> sorted distinct orders."""
    orders = set()
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            low, high = part.split("-", 1)
            orders.update(range(int(low), int(high) + 1))
        elif part:
            orders.add(int(part))
    if not orders or min(orders) < 1:
        raise argparse.ArgumentTypeError(f"invalid order range: '{text}'")
    return sorted(orders)


def load_bpa(args) -> MassFunction:
    return BpaParser(tolerance=args.settings.tolerance).parse_file(args.input)


def cmd_entropy(args) -> int:
    """Evaluate the requested measures on one BPA file."""
    try:
        measures = [Measure(name.strip()) for name in args.measures.split(",") if name.strip()]
    except ValueError as e:
        args.parser.error(str(e))
    if not measures:
        args.parser.error("no measure requested")
    if Measure.TFB in measures and args.k is None:
        args.parser.error("-k is required when tfb is requested")

    m = load_bpa(args)
    precision = args.settings.precision
    rows = []
    for measure in measures:
        report = entropy_report(m, measure, args.k if measure == Measure.TFB else None)
        row = report.model_dump(mode="json")
        row["value"] = round(report.value, precision)
        rows.append(row)
    emit(args, json.dumps(rows, indent=2) + "\n")
    return EXIT_OK


def cmd_table(args) -> int:
    """Reproduce table 1 (maximum TFB entropy) or table 2 (information volume)."""
    precision = args.settings.precision
    if args.which == 1:
        header = ["k", "n", "argument", "value"]
        rows = [
            (k, n, hoivmf_argument(n, k), hoivmf_value(n, k))
            for k in range(1, 5)
            for n in range(2, 6)
        ]
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NonConvergenceWarning)
            trace = deng_volume(deng_max_ab_bpa(), max_iter=TABLE2_ITERATIONS)
        header = ["k", "deng_method", "hoivmf"]
        rows = [(k, value, hoivmf_value(2, k)) for k, value in trace.steps]
    emit(args, table_to_text(header, rows, precision))
    return EXIT_OK


def cmd_surface(args) -> int:
    """Write one surface CSV per order and a summary of the maxima."""
    settings = args.settings.with_overrides(grid_step=args.step)
    out_dir = Path(args.out_dir)
    precision = settings.precision
    summary = []
    for k in args.k:
        spec = GridSpec(step=settings.grid_step, measure=Measure.TFB, k=k)
        result = grid_search_max(spec)
        written = write_table(
            out_dir / f"surface_k{k}.csv", ["mA", "mB", "mAB", "value"], result.rows(), precision
        )
        logger.info("Wrote %s", written)
        x, y, z = result.argmax_point
        summary.append((k, result.max_value, x, y, z, hoivmf_value(2, k)))
    header = ["k", "max_value", "mA", "mB", "mAB", "hoivmf"]
    emit(args, table_to_text(header, summary, precision))
    return EXIT_OK


def cmd_trajectory(args) -> int:
    """Measures along the linear path from total ignorance to a Bayesian BPA."""
    if args.steps < 2:
        args.parser.error("--steps must be >= 2")
    if not 0.0 <= args.ratio <= 1.0:
        args.parser.error("--ratio must lie in [0, 1]")

    frame = make_frame(["A", "B"])
    header = ["t", "shannon_over_focal_masses", "fb", "deng"]
    header += [f"tfb_k{k}" for k in TRAJECTORY_ORDERS]
    rows = []
    for i in range(args.steps):
        t = i / (args.steps - 1)
        m = MassFunction(
            frame=frame, masses={1: args.ratio * t, 2: (1.0 - args.ratio) * t, 3: 1.0 - t}
        )
        row = [t, focal_shannon(m), fb_entropy(m), deng_entropy(m)]
        row += [tfb_entropy(m, k) for k in TRAJECTORY_ORDERS]
        rows.append(row)
    emit(args, table_to_text(header, rows, args.settings.precision))
    return EXIT_OK


def cmd_split(args) -> int:
    """Emit the leaves or per-origin leaf counts of a k-round split."""
    m = load_bpa(args)
    tree = build_split_tree(m, args.k, args.settings.max_leaves, keep_rounds=args.all_rounds)
    rounds = tree.rounds if args.all_rounds else [tree.leaves]
    if args.emit == "leaves":
        header = ["origin", "subset", "round", "mass"]
        rows = [row for leaves in rounds for row in leaves.rows(m.frame)]
    else:
        header = ["origin", "round", "count"]
        rows = [
            (m.frame.format_subset(origin), leaves.round, count)
            for leaves in rounds
            for origin, count in leaves.counts_by_origin().items()
        ]
    emit(args, table_to_text(header, rows, args.settings.precision))
    return EXIT_OK


def cmd_deng_volume(args) -> int:
    """Per-iteration values of the proportional split, final value marked."""
    settings = args.settings.with_overrides(epsilon=args.epsilon, max_iter=args.max_iter)
    m = load_bpa(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NonConvergenceWarning)
        trace = deng_volume(m, settings.epsilon, settings.max_iter, settings.max_leaves)

    rows = [("step", iteration, value) for iteration, value in trace.steps]
    last_iteration, last_value = trace.steps[-1]
    rows.append(("final", last_iteration, last_value))
    if not trace.converged:
        logger.warning("No convergence within %d iterations", settings.max_iter)
        rows.append(("warning", last_iteration, last_value))
    emit(args, table_to_text(["kind", "iteration", "value"], rows, settings.precision))
    return EXIT_OK


def cmd_validate(args) -> int:
    """Check a BPA file against the axioms."""
    try:
        m = load_bpa(args)
    except InvalidMassFunctionError as e:
        emit(args, e.result.get_summary().lstrip("\n") + "\n")
        return EXIT_USAGE
    emit(args, m.validate_axioms(args.settings.tolerance).get_summary().lstrip("\n") + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    """Run every invariant cross-check on a BPA file."""
    m = load_bpa(args)
    report = cross_check(m, args.k_max, args.settings.max_leaves)
    if args.json:
        emit(args, json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        emit(args, report.get_summary() + "\n")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_max_bpa(args) -> int:
    """Print the maximizing BPA of the k-order TFB entropy on n elements."""
    m = max_tfb_bpa_for(args.n, args.k)
    document = {
        "n": args.n,
        "k": args.k,
        "hoivmf": hoivmf_value(args.n, args.k),
        "bpa": to_document(m),
    }
    emit(args, json.dumps(document, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evidence", description="Belief entropy and information volume tool"
    )
    parser.add_argument("--config", help="YAML settings file")
    parser.add_argument(
        "--precision", help="Printed decimals (default 4), or 'full' for all digits"
    )
    parser.add_argument("--out", "-o", help="Write output to this file instead of stdout")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # entropy subcommand
    entropy_parser = subparsers.add_parser("entropy", help="Entropy measures of a BPA file")
    entropy_parser.add_argument("input", help="BPA file (.json, .yml)")
    entropy_parser.add_argument(
        "--measures",
        "-m",
        default="shannon,deng,fb",
        help="Comma-separated subset of shannon,deng,fb,tfb (default: shannon,deng,fb)",
    )
    entropy_parser.add_argument("-k", type=int, help="TFB order (required for tfb)")
    entropy_parser.set_defaults(func=cmd_entropy, parser=entropy_parser)

    # table subcommand
    table_parser = subparsers.add_parser("table", help="Reproduce table 1 or table 2")
    table_parser.add_argument("which", type=int, choices=[1, 2])
    table_parser.set_defaults(func=cmd_table, parser=table_parser)

    # surface subcommand
    surface_parser = subparsers.add_parser("surface", help="TFB entropy surfaces, n = 2")
    surface_parser.add_argument(
        "--k", type=parse_k_range, default="1-9", help="Orders, e.g. 1-9 or 1,3"
    )
    surface_parser.add_argument("--step", type=float, help="Grid step (default 0.01)")
    surface_parser.add_argument("--out-dir", required=True, help="Directory for surface CSVs")
    surface_parser.set_defaults(func=cmd_surface, parser=surface_parser)

    # trajectory subcommand
    trajectory_parser = subparsers.add_parser("trajectory", help="Measures along a BPA path")
    trajectory_parser.add_argument("--ratio", "-r", type=float, default=0.5)
    trajectory_parser.add_argument("--steps", type=int, default=11)
    trajectory_parser.set_defaults(func=cmd_trajectory, parser=trajectory_parser)

    # split subcommand
    split_parser = subparsers.add_parser("split", help="Split tree leaves or leaf counts")
    split_parser.add_argument("input", help="BPA file (.json, .yml)")
    split_parser.add_argument("-k", type=int, required=True, help="Split rounds")
    split_parser.add_argument("--emit", choices=["leaves", "counts"], default="leaves")
    split_parser.add_argument("--all-rounds", action="store_true", help="Emit rounds 1..k")
    split_parser.set_defaults(func=cmd_split, parser=split_parser)

    # deng-volume subcommand
    volume_parser = subparsers.add_parser("deng-volume", help="Iterative information volume")
    volume_parser.add_argument("input", help="BPA file (.json, .yml)")
    volume_parser.add_argument("--epsilon", type=float, help="Stop increase (default 1e-6)")
    volume_parser.add_argument("--max-iter", type=int, help="Iteration cap (default 100)")
    volume_parser.set_defaults(func=cmd_deng_volume, parser=volume_parser)

    # validate subcommand
    validate_parser = subparsers.add_parser("validate", help="Validate a BPA file")
    validate_parser.add_argument("input", help="BPA file (.json, .yml)")
    validate_parser.set_defaults(func=cmd_validate, parser=validate_parser)

    # check subcommand
    check_parser = subparsers.add_parser("check", help="Cross-check all invariants")
    check_parser.add_argument("input", help="BPA file (.json, .yml)")
    check_parser.add_argument("--k-max", type=int, default=4)
    check_parser.add_argument("--json", action="store_true", help="JSON output")
    check_parser.set_defaults(func=cmd_check, parser=check_parser)

    # max-bpa subcommand
    max_parser = subparsers.add_parser("max-bpa", help="Maximizing BPA of TFB entropy")
    max_parser.add_argument("-n", type=int, required=True, help="Frame cardinality")
    max_parser.add_argument("-k", type=int, required=True, help="TFB order")
    max_parser.set_defaults(func=cmd_max_bpa, parser=max_parser)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        settings: RunSettings = load_settings(args.config)
        args.settings = settings.with_overrides(precision=args.precision)
        return args.func(args)
    except TreeTooLargeError as e:
        report_error(e)
        return EXIT_GUARD
    except (EvidenceError, ValueError) as e:
        # ValueError covers pydantic ValidationError from settings overrides
        report_error(e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

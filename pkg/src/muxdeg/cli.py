"""muxdeg command line.

    muxdeg validate --layer Meetings=meetings.csv --layer "Phone Calls"=calls.csv
    muxdeg rank --approach multilayer -k 20 --montagna
    muxdeg compare -k 20 --roles roles.csv --histogram hist.csv --layer ...

Exit codes: 0 success, 1 internal error, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from datetime import datetime, timezone
from typing import List, Optional

from . import __version__, analysis, datasets
from .errors import MuxdegError, NotFound
from .ingest import (
    LayerSourceSpec,
    column_name,
    export_results,
    load_network,
    load_roles,
    render_results,
    validation_report,
)

log = logging.getLogger("muxdeg")

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def layer_arg(text: str):
    name, sep, path = text.partition("=")
    if not sep or not name or not path:
        raise argparse.ArgumentTypeError(f"expected NAME=PATH, got {text!r}")
    return name, path


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--layer", action="append", type=layer_arg, default=[], metavar="NAME=PATH",
                        help="edge-list CSV for one layer (repeatable, order kept)")
    common.add_argument("--montagna", action="store_true",
                        help="use the bundled Montagna fixture (layers and roles)")
    common.add_argument("--columns", default="source,target,weight", metavar="SRC,TGT[,W]",
                        help="edge CSV column names (default: %(default)s)")
    common.add_argument("--roles", metavar="PATH", help="roles CSV (actor,role[,family])")
    common.add_argument("--format", choices=("csv", "json"), help="machine-readable output format")
    common.add_argument("-o", "--output", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--stamp", action="store_true", help="embed a generation timestamp")

    parser = argparse.ArgumentParser(prog="muxdeg", description="Degree centrality on multiplex networks.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="print layer, shared-actor and edge counts")

    rank = sub.add_parser("rank", parents=[common], help="top-k actors under one approach")
    rank.add_argument("--approach", default="multilayer",
                      help="aggregate | multilayer | layer:<name> (default: %(default)s)")
    rank.add_argument("-k", type=positive_int, default=analysis.DEFAULT_K)
    rank.add_argument("--mode", choices=("binary", "weighted"), default="binary",
                      help="count neighbours (binary) or sum weights")

    cmp_ = sub.add_parser("compare", parents=[common], help="multilayer/aggregate/per-layer comparison table")
    cmp_.add_argument("-k", type=positive_int, default=analysis.DEFAULT_K)
    cmp_.add_argument("--histogram", metavar="PATH", help="also write stacked-histogram series here")
    cmp_.add_argument("--layer-order", metavar="NAME[,NAME...]",
                      help="order of the per-layer columns (default: layer order, "
                           "or the published order with --montagna)")
    return parser


def _specs(args) -> List[LayerSourceSpec]:
    cols = [c.strip() for c in args.columns.split(",")]
    if len(cols) not in (2, 3) or not all(cols):
        raise UsageError(f"--columns expects SRC,TGT[,W], got {args.columns!r}")
    weight = cols[2] if len(cols) == 3 else None
    specs = [LayerSourceSpec(path, name, cols[0], cols[1], weight) for name, path in args.layer]
    if args.montagna:
        if specs:
            raise UsageError("--montagna and --layer are mutually exclusive")
        specs = datasets.montagna_specs()
    if not specs:
        raise UsageError("at least one --layer NAME=PATH (or --montagna) is required")
    return specs


def _load(args):
    net, report = load_network(_specs(args))
    roles_path = args.roles or (datasets.montagna_roles_path() if args.montagna else None)
    roles = load_roles(roles_path) if roles_path else {}
    if roles:
        report = validation_report(net, roles)
    for w in report.warnings:
        if w not in net.warnings:
            log.warning(w)
    return net, report, roles


def _stamp(args) -> Optional[str]:
    if not args.stamp:
        return None
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _plain_table(header: List[str], rows: List[list]) -> str:
    cells = [header] + [["" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    left = {i for i, h in enumerate(header) if h == "role"}
    lines = [
        "  ".join(c.ljust(w) if i in left else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))).rstrip()
        for r in cells
    ]
    return "\n".join(lines) + "\n"


def cmd_validate(args) -> int:
    _, report, _ = _load(args)
    if args.format == "json":
        _emit(args, render_results([], "json", report=report, stamp=_stamp(args)))
    else:
        _emit(args, report.format() + "\n")
    return EXIT_OK


def cmd_rank(args) -> int:
    net, report, roles = _load(args)
    approach = args.approach
    if approach.startswith("layer:"):
        try:
            net.layer(approach[len("layer:"):])
        except NotFound as exc:
            raise UsageError(str(exc)) from None
    elif approach not in ("aggregate", "multilayer"):
        raise UsageError(f"unknown approach {approach!r}")
    scores = analysis.approach_scores(net, approach, args.mode)
    ranking = analysis.rank_top_k(scores, args.k, roles)
    if args.format:
        _emit(args, render_results(ranking, args.format, report=report,
                                   score_name=approach, stamp=_stamp(args)))
    else:
        rows = [[e.rank, e.actor, e.role.label() if e.role else "", e.score] for e in ranking]
        _emit(args, _plain_table(["rank", "actor", "role", "score"], rows))
    return EXIT_OK


def cmd_compare(args) -> int:
    net, report, roles = _load(args)
    if args.layer_order:
        order = [n.strip() for n in args.layer_order.split(",")]
    elif args.montagna:
        order = list(datasets.TABLE_LAYER_ORDER)
    else:
        order = None
    if order:
        for name in order:
            try:
                net.layer(name)
            except NotFound as exc:
                raise UsageError(str(exc)) from None
    table = analysis.comparison_table(net, roles, args.k, order)
    stamp = _stamp(args)
    if args.format:
        _emit(args, render_results(table, args.format, report=report, stamp=stamp))
    else:
        header = ["actor", "role", "multilayer", "aggregate"] + [column_name(n) for n in table.layer_names]
        rows = [
            [r.actor, r.role.label() if r.role else "", r.multilayer, r.aggregate]
            + ["absent" if r.layers[n] is None else r.layers[n] for n in table.layer_names]
            for r in table.rows
        ]
        _emit(args, _plain_table(header, rows))
    if args.histogram:
        if table.rows:
            series = analysis.histogram_data(table)
        else:
            series = []
        fmt = args.format or ("json" if args.histogram.endswith(".json") else "csv")
        export_results(series, args.histogram, fmt, report=report, stamp=stamp)
    return EXIT_OK


COMMANDS = {"validate": cmd_validate, "rank": cmd_rank, "compare": cmd_compare}


def configure_logging() -> None:
    """Diagnostics go to stderr; ``MUXDEG_LOG`` sets the level (default WARNING)."""
    level = os.environ.get("MUXDEG_LOG", "WARNING").upper()
    for h in [h for h in log.handlers if getattr(h, "_muxdeg", False)]:
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler._muxdeg = True
    handler.setFormatter(logging.Formatter("muxdeg: %(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(getattr(logging, level, logging.WARNING))


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"muxdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MuxdegError, ValueError, OSError) as exc:
        print(f"muxdeg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        log.exception("internal error")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

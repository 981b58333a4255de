"""Command-line driver.

Exit status: 0 on success, 1 on bad input (config, flags), 2 when an
internal invariant check fails.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import accounting, io
from .canonical import canonical_search, divergence_notes
from .duplication import Strategy
from .model import MIN_COST, RELOCATION_RULES, InvariantError, NetworkError, Thresholds, exact
from .placement import relocate_all
from .verify import run_verification

log = logging.getLogger("replicaplace")

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _number(text: str):
    try:
        return exact(text, "threshold")
    except NetworkError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _y_list(text: str) -> list:
    try:
        return [exact(t.strip(), "Y") for t in text.split(",") if t.strip()]
    except NetworkError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _y_range(text: str) -> list:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected FROM:TO:STEP")
    try:
        lo, hi, step = (exact(p, "Y-range") for p in parts)
    except NetworkError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if step <= 0 or hi < lo:
        raise argparse.ArgumentTypeError("need STEP > 0 and TO >= FROM")
    out, y = [], Fraction(lo)
    while y <= hi:
        out.append(int(y) if y.denominator == 1 else y)
        y += step
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", type=Path, help="network config (JSON); default: bundled canonical dataset")
    common.add_argument("--out", type=Path, help="directory for report files")
    common.add_argument("--rule", choices=RELOCATION_RULES, help="override the config's relocation rule")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="replicaplace", description="Replica placement under access-cost and demand thresholds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("best-locate", parents=[common], help="relocate every file to its best zone")

    dup = sub.add_parser("duplicate", parents=[common], help="run one duplication pass")
    dup.add_argument("--strategy", required=True, choices=[s.value for s in Strategy])
    dup.add_argument("--A", type=_number, help="maximum access cost (default from config)")
    dup.add_argument("--Y", type=_number, help="demand threshold (default from config)")

    sw = sub.add_parser("sweep", parents=[common], help="net gain across demand thresholds")
    sw.add_argument("--strategy", required=True, choices=[s.value for s in Strategy])
    sw.add_argument("--A", type=_number)
    ys = sw.add_mutually_exclusive_group(required=True)
    ys.add_argument("--Y-list", dest="y_list", type=_y_list, metavar="Y1,Y2,...")
    ys.add_argument("--Y-range", dest="y_range", type=_y_range, metavar="FROM:TO:STEP")

    ver = sub.add_parser("verify", parents=[common], help="oracle agreement suites and canonical matrix search")
    ver.add_argument("--instances", type=int, default=500)
    ver.add_argument("--graphs", type=int, default=200)
    ver.add_argument("--seed", type=int, default=0)
    return parser


def _plain(x):
    return x if isinstance(x, int) else float(x)


def _write(out: Path | None, name: str, text: str) -> None:
    if out is None:
        return
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(text, encoding="utf-8", newline="")


def _network(cfg: io.Config, rule: str | None):
    return cfg.network if rule is None else dataclasses.replace(cfg.network, relocation=rule)


def cmd_best_locate(args, cfg: io.Config) -> int:
    placement = relocate_all(_network(cfg, args.rule))
    text = io.relocation_csv(placement)
    sys.stdout.write(text)
    _write(args.out, "relocation.csv", text)
    notes = io.relocation_notes(placement, cfg.reference)
    _emit_notes(args.out, notes)
    return EXIT_OK


def cmd_duplicate(args, cfg: io.Config) -> int:
    th = Thresholds(
        args.A if args.A is not None else cfg.thresholds.A,
        args.Y if args.Y is not None else cfg.thresholds.Y,
    )
    net = _network(cfg, args.rule)
    res = accounting.run(net, args.strategy, th, cfg.tariff)
    grid = io.format_grid(res.after, net.n)
    sys.stdout.write(grid)
    sys.stdout.write(
        f"\nduplicates={res.duplicates} gain={io._num(res.gain.total)} "
        f"gain_mu={res.gain_money:.2f} hosting_mu={res.hosting:.2f} net_gain_mu={res.net_gain:.2f}\n"
    )
    for e in res.trace.skipped():
        log.warning("zone %d, file %d: %s", e.zone, e.file, e.reason)
    _write(args.out, "placement.txt", grid)
    _write(args.out, "trace.jsonl", io.trace_jsonl(res.trace))
    _write(args.out, "cells.csv", io.cells_csv(res))
    credits = accounting.replica_gains(res.before, res.after, net.demand, net.costs)
    _write(args.out, "replicas.csv", io.replica_gains_csv(credits))
    return EXIT_OK


def cmd_sweep(args, cfg: io.Config) -> int:
    A = args.A if args.A is not None else cfg.thresholds.A
    Ys = args.y_list if args.y_list is not None else args.y_range
    if not Ys:
        raise UsageError("sweep: no Y values given")
    net = _network(cfg, args.rule)
    rows = accounting.sweep(net, args.strategy, A, Ys, cfg.tariff)
    text = io.sweep_csv(rows)
    sys.stdout.write(text)
    _write(args.out, "sweep.csv", text)
    _write(args.out, "per_file.csv", io.per_file_csv(rows))
    _write(args.out, "per_zone.csv", io.per_zone_csv(rows))
    be = accounting.break_even(rows)
    best = accounting.best_row(rows)
    summary = {
        "strategy": args.strategy,
        "A": _plain(A),
        "break_even_Y": None if be is None else round(be, 2),
        "best_net_gain_Y": _plain(best.Y),
        "best_net_gain_mu": round(best.net_gain, 2),
    }
    _write(args.out, "summary.json", json.dumps(summary, indent=2) + "\n")
    print(json.dumps(summary), file=sys.stderr)
    notes = io.duplicate_count_notes(args.strategy, rows, cfg.reference)
    _emit_notes(args.out, notes)
    return EXIT_OK


def cmd_verify(args, cfg: io.Config) -> int:
    results = run_verification(args.instances, args.graphs, args.seed)
    for r in results:
        print(r.line())
    if cfg.network.relocation != MIN_COST:
        n_min_cost = len(canonical_search(cfg, rule=MIN_COST))
        print(f"[INFO] canonical matrix search under the {MIN_COST} relocation rule: {n_min_cost} solutions")
    notes = divergence_notes(cfg, args.rule)
    _emit_notes(args.out, notes)
    report = {
        "checks": [{"name": r.name, "cases": r.cases, "passed": r.passed, "failures": r.failures[:20]} for r in results],
        "divergences": notes,
    }
    _write(args.out, "verify_report.json", json.dumps(report, indent=2) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVARIANT


def _emit_notes(out: Path | None, notes: list[str]) -> None:
    for n in notes:
        print(n, file=sys.stderr)
    if notes:
        _write(out, "notes.txt", "".join(n + "\n" for n in notes))


COMMANDS = {
    "best-locate": cmd_best_locate,
    "duplicate": cmd_duplicate,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = io.load_config(args.config)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except NetworkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 success, 1 bad input or parameters, 2 internal invariant
violation (including a failed verification chain).
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys

from . import closed, families, kirchhoff, montecarlo, transforms
from .canon import find_isomorphism
from .errors import GraphError, InvariantViolation
from .io import dumps_graph, dumps_stable, read_graph, write_graph

log = logging.getLogger("period_forge")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> families.FamilyParams:
    if None in (args.k, args.l, args.m):
        raise GraphError("family graphs need --k, --l and --m")
    return families.FamilyParams(args.k, args.l, args.m)


def cmd_gen(args) -> int:
    if args.kind in ("zigzag", "zigzag-completed"):
        if args.n is None:
            raise GraphError(f"{args.kind} needs --n")
        g = families.zigzag(args.n) if args.kind == "zigzag" else families.zigzag_completed(args.n)
    elif args.kind == "family":
        g = families.family_graph(_params(args))
    else:
        g = families.family_dual(_params(args))
    _emit(dumps_graph(g), args.output)
    return 0


def cmd_psi(args) -> int:
    g = read_graph(args.graph)
    poly = kirchhoff.psi_enumerate(g, args.max_edges)
    print(poly.to_text())
    return 0


def cmd_trees(args) -> int:
    print(kirchhoff.spanning_tree_count(read_graph(args.graph)))
    return 0


def cmd_period_closed(args) -> int:
    if args.zigzag is not None:
        value = closed.zigzag_period(args.zigzag)
    else:
        value = closed.family_period(families.FamilyParams(*args.family))
    print(f"{value} = {value.as_float():.12g}")
    return 0


def cmd_period_mc(args) -> int:
    g = read_graph(args.graph)
    cfg = montecarlo.McConfig(
        samples=args.samples, seed=args.seed, workers=args.workers,
        sampler=args.sampler, batches=args.batches,
    )
    est = montecarlo.estimate_period(g, cfg)
    rec = est.record()
    batch_means = rec.pop("batch_means")
    _emit(dumps_stable(rec), None)
    if args.batch_csv:
        with open(args.batch_csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(["batch", "mean"])
            for i, m in enumerate(batch_means):
                w.writerow([i, f"{m:.12g}"])
    return 0


def cmd_twist_chain(args) -> int:
    p = _params(args)
    report = transforms.reduce_to_zigzag(p)
    if args.emit_intermediates:
        out = args.emit_intermediates
        os.makedirs(out, exist_ok=True)
        write_graph(report.initial, os.path.join(out, "step00_initial.json"))
        for s in report.steps:
            i = s.index + 1
            write_graph(s.completed, os.path.join(out, f"step{i:02d}_completed.json"))
            write_graph(s.twisted, os.path.join(out, f"step{i:02d}_twisted.json"))
            write_graph(s.decompleted, os.path.join(out, f"step{i:02d}_decompleted.json"))
        if report.final is not None:
            write_graph(report.final, os.path.join(out, "final.json"))
        with open(os.path.join(out, "report.json"), "w", encoding="utf-8") as fh:
            fh.write(dumps_stable(report.summary()))
    _emit(dumps_stable(report.summary()), None)
    return 0 if report.verdict else 2


def cmd_dual(args) -> int:
    _emit(dumps_graph(transforms.planar_dual(read_graph(args.graph))), args.output)
    return 0


def cmd_iso(args) -> int:
    phi = find_isomorphism(read_graph(args.first), read_graph(args.second))
    rec = {"isomorphic": phi is not None}
    if phi is not None:
        rec["witness"] = {str(v): phi[v] for v in sorted(phi)}
    _emit(dumps_stable(rec), None)
    return 0


def cmd_table(args) -> int:
    rows = closed.table_rows(args.max_n)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: (f"{v:.12g}" if isinstance(v, float) else v) for k, v in row.items()})
    sys.stdout.write(buf.getvalue())
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="period-forge", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def family_flags(p, required=False):
        p.add_argument("--k", type=int, required=required)
        p.add_argument("--l", type=int, required=required)
        p.add_argument("--m", type=int, required=required)

    p = sub.add_parser("gen", help="write a generated graph as JSON")
    p.add_argument("kind", choices=["zigzag", "zigzag-completed", "family", "family-dual"])
    p.add_argument("--n", type=int)
    family_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("psi", help="print the Kirchhoff polynomial")
    p.add_argument("graph")
    p.add_argument("--max-edges", type=int)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("trees", help="print the spanning tree count")
    p.add_argument("graph")
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("period", help="closed-form or Monte Carlo period")
    psub = p.add_subparsers(dest="mode", required=True)
    pc = psub.add_parser("closed")
    grp = pc.add_mutually_exclusive_group(required=True)
    grp.add_argument("--zigzag", type=int, metavar="N")
    grp.add_argument("--family", type=int, nargs=3, metavar=("K", "L", "M"))
    pc.set_defaults(func=cmd_period_closed)
    pm = psub.add_parser("mc")
    pm.add_argument("--graph", required=True)
    pm.add_argument("--samples", type=int, default=1_000_000)
    pm.add_argument("--seed", type=int, default=0)
    pm.add_argument("--workers", type=int, default=1)
    pm.add_argument("--batches", type=int, default=16)
    pm.add_argument("--sampler", default="sector",
                    choices=sorted(set(montecarlo.SAMPLERS) | set(montecarlo.SAMPLER_ALIASES)))
    pm.add_argument("--batch-csv")
    pm.set_defaults(func=cmd_period_mc)

    p = sub.add_parser("twist-chain", help="verify the twist reduction to the zig-zag graph")
    family_flags(p, required=True)
    p.add_argument("--emit-intermediates", metavar="DIR")
    p.set_defaults(func=cmd_twist_chain)

    p = sub.add_parser("dual", help="planar dual of an embedded graph")
    p.add_argument("graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("iso", help="test two graphs for isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("table", help="CSV table of closed-form periods")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_table)
    return ap


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())

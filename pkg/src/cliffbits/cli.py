"""Command-line front end.

Subcommands:
  classify   name the matrix algebra for a signature (k, l)
  cube       print the vertex diagram of the eight signature classes
  efb-table  print the signed basis-word table for Cl(m, m)
  mul        multiply two multivector expressions over Cl(m, m)
  verify     run the internal cross-validation suites
  bench      compare dense product costs of the two engines

Exit status: 0 on success, 1 when a verify suite fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .blades import Metric, Multivector, ParseError, mv_mul
from .classify import (algebra_name, classification_record, classify,
                       cube_record, render_cube)
from .efb import (blades_to_efb, efb_product, efb_to_blades, sig_label,
                  table_entries)
from .instrument import op_counters, reset_op_counters
from .sampling import dense_blade_multivector, dense_efb_multivector
from .verify import run_suite


def _ascii_default() -> bool:
    return bool(os.environ.get("CLIFFBITS_ASCII"))


def _cmd_classify(args) -> int:
    record = classification_record(args.k, args.l)
    if args.json:
        print(json.dumps(record, indent=2))
        return 0
    c = classify(args.k, args.l)
    print(f"Cl({args.k},{args.l}) = {algebra_name(c)}")
    print(f"  base ring      {record['base']}"
          + ("  (doubled)" if c.doubled else ""))
    print(f"  matrix size    {c.matrix_size}")
    print(f"  central        {'yes' if c.is_central else 'no'}")
    print(f"  simple         {'yes' if c.is_simple else 'no'}")
    print(f"  volume square  {c.omega_sq:+d}")
    if record["tau_sq"] is not None:
        print(f"  dual square    {record['tau_sq']:+d}")
        print(f"  twisted square {record['omega_tau_sq']:+d}")
    return 0


def _cmd_cube(args) -> int:
    if args.json:
        print(json.dumps(cube_record(), indent=2))
        return 0
    print(render_cube(ascii_mode=args.ascii or _ascii_default()))
    return 0


def _cmd_efb_table(args) -> int:
    if not 1 <= args.m <= 4:
        print(f"efb-table: m must be between 1 and 4, got {args.m}",
              file=sys.stderr)
        return 2
    entries = table_entries(args.m)
    if args.json:
        payload = [
            {"row": row, "col": col, "sign": sign, "word": word}
            for row, col, sign, word in entries
        ]
        print(json.dumps({"m": args.m, "entries": payload}, indent=2))
        return 0
    dim = 1 << args.m
    labels = [f"{sig_label(v, args.m)} ({v})" for v in range(dim)]
    cell = {(r, c): ("-" if s < 0 else " ") + w for r, c, s, w in entries}
    width = max(max(len(v) for v in cell.values()), max(map(len, labels))) + 1
    head = " " * (len(labels[0]) + 1) + " | ".join(
        lab.ljust(width) for lab in labels)
    print(head.rstrip())
    for row in range(dim):
        cells = [cell[row, col].ljust(width) for col in range(dim)]
        print(labels[row] + " " + " | ".join(cells).rstrip())
    return 0


def _cmd_mul(args) -> int:
    metric = Metric.interleaved(args.m)
    try:
        x = Multivector.parse(args.left, metric)
        y = Multivector.parse(args.right, metric)
    except ParseError as exc:
        print(f"mul: {exc}", file=sys.stderr)
        return 2
    results = {}
    if args.engine in ("blade", "both"):
        results["blade"] = str(mv_mul(x, y))
    if args.engine in ("efb", "both"):
        fast = efb_product(blades_to_efb(x, args.m), blades_to_efb(y, args.m))
        results["efb"] = str(efb_to_blades(fast))
    if args.engine == "both" and results["blade"] != results["efb"]:
        print("mul: engines disagree", file=sys.stderr)
        print(f"  blade: {results['blade']}", file=sys.stderr)
        print(f"  efb:   {results['efb']}", file=sys.stderr)
        return 1
    product = results.get("efb", results.get("blade"))
    if args.json:
        print(json.dumps({"m": args.m, "left": args.left, "right": args.right,
                          "engine": args.engine, "product": product}))
    else:
        print(product)
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.level)
    if args.json:
        payload = [
            {"name": r.name, "passed": r.passed, "checked": r.checked,
             "detail": r.detail}
            for r in results
        ]
        print(json.dumps({"level": args.level, "results": payload}, indent=2))
    else:
        for r in results:
            mark = "ok  " if r.passed else "FAIL"
            line = f"{mark} {r.name:32s} {r.checked:7d} cases"
            if r.detail:
                line += f"  ({r.detail})"
            print(line)
    return 0 if all(r.passed for r in results) else 1


def bench_results(m_max: int, seed: int = 20240914) -> list[dict]:
    """Time dense products in both engines for m = 1 .. m_max.

    Operation counts are deterministic: a dense blade product touches
    16^m coefficient pairs while the fast engine touches 8^m triples,
    a ratio of exactly 2^m.  Wall times ride along for context.
    """
    if not 1 <= m_max <= 8:
        raise ValueError(f"m_max must be between 1 and 8, got {m_max}")
    import random
    rng = random.Random(seed)
    rows = []
    for m in range(1, m_max + 1):
        metric = Metric.interleaved(m)
        bx = dense_blade_multivector(metric, rng)
        by = dense_blade_multivector(metric, rng)
        ex = dense_efb_multivector(m, rng)
        ey = dense_efb_multivector(m, rng)

        reset_op_counters()
        t0 = time.perf_counter()
        mv_mul(bx, by)
        blade_sec = time.perf_counter() - t0
        pairs = op_counters().blade_pairs

        reset_op_counters()
        t0 = time.perf_counter()
        efb_product(ex, ey)
        efb_sec = time.perf_counter() - t0
        triples = op_counters().efb_triples
        reset_op_counters()

        assert triples << m == pairs, (m, pairs, triples)
        rows.append({
            "m": m,
            "blade_pairs": pairs,
            "efb_triples": triples,
            "count_ratio": pairs // triples,
            "blade_seconds": round(blade_sec, 4),
            "efb_seconds": round(efb_sec, 4),
            "wall_ratio": round(blade_sec / efb_sec, 2) if efb_sec else None,
        })
    return rows


def _cmd_bench(args) -> int:
    if not 1 <= args.m_max <= 8:
        print(f"bench: m-max must be between 1 and 8, got {args.m_max}",
              file=sys.stderr)
        return 2
    rows = bench_results(args.m_max, seed=args.seed)
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'m':>2} {'blade pairs':>14} {'efb triples':>12} {'ratio':>7} "
          f"{'blade s':>9} {'efb s':>9}")
    for r in rows:
        print(f"{r['m']:>2} {r['blade_pairs']:>14} {r['efb_triples']:>12} "
              f"{r['count_ratio']:>7} {r['blade_seconds']:>9.4f} "
              f"{r['efb_seconds']:>9.4f}")
    print("count ratio is exact (2^m); wall times are reported, not asserted")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffbits",
        description="Clifford algebra products, basis tables, and the "
                    "signature classification, over exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="name the algebra for Cl(k, l)")
    p.add_argument("k", type=int, help="generators squaring to +1")
    p.add_argument("l", type=int, help="generators squaring to -1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("cube", help="diagram of the eight signature classes")
    p.add_argument("--ascii", action="store_true",
                   help="force plain ASCII output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cube)

    p = sub.add_parser("efb-table", help="signed basis-word table for Cl(m, m)")
    p.add_argument("m", type=int, help="number of slot pairs (1..4)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_efb_table)

    p = sub.add_parser("mul", help="multiply two expressions over Cl(m, m)")
    p.add_argument("m", type=int, help="number of generator pairs")
    p.add_argument("left", help="expression, e.g. '1/2 g1 g2 + 3'")
    p.add_argument("right")
    p.add_argument("--engine", choices=["blade", "efb", "both"],
                   default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("verify", help="run the cross-validation suites")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="compare dense product costs")
    p.add_argument("m_max", type=int, nargs="?", default=4,
                   metavar="m-max", help="largest m to time (1..8)")
    p.add_argument("--seed", type=int, default=20240914)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return 2

"""Command-line entry point: ``pvc-kernel {kernelize,gen,bench}``."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import yaml

from .graph import GraphParseError, read_graph, serialize_graph
from .instances import erdos_renyi, planted
from .kernel import VARIANTS, PvcInstance
from .oracle import OracleTooLarge
from .report import CSV_HEADER, csv_row, run

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISAGREE = 3
ORACLE_AUTO_N = 16

log = logging.getLogger("pvckernel")


def _nonneg(text: str) -> int:
    val = int(text)
    if val < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {val}")
    return val


def _prob(text: str) -> float:
    val = float(text)
    if not 0.0 <= val <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {val}")
    return val


def cmd_kernelize(args) -> int:
    try:
        g = read_graph(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_PARSE
    except GraphParseError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    inst = PvcInstance(g, args.k, args.l)
    try:
        outcome, report = run(inst, args.variant, with_oracle=args.oracle_check)
    except OracleTooLarge as exc:
        print(f"error: --oracle-check: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2)
    print(text)
    if args.json:
        Path(args.json).write_text(text + "\n", encoding="utf-8")
    if report["oracle"] is not None and not report["oracle"]["agree"]:
        print("error: kernel disagrees with the brute-force oracle", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.model == "er":
        g = erdos_renyi(args.n, args.p, args.seed)
        params = {"model": "er", "n": args.n, "p": args.p, "seed": args.seed}
        comments = [f"er n={args.n} p={args.p} seed={args.seed}"]
    else:
        try:
            g, s = planted(args.n, args.k, args.l, args.seed)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        params = {"model": "planted", "n": args.n, "k": args.k, "l": args.l,
                  "seed": args.seed, "solution": s}
        comments = [f"planted n={args.n} k={args.k} l={args.l} seed={args.seed}"]
    text = serialize_graph(g, comments)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
        Path(args.out + ".json").write_text(json.dumps(params, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def load_suite(path) -> list[dict]:
    """Expand a suite file into one job dict per (entry, seed)."""
    with open(path, encoding="utf-8") as fh:
        doc = yaml.safe_load(fh)
    entries = doc.get("suite") if isinstance(doc, dict) else doc
    if not isinstance(entries, list) or not entries:
        raise ValueError("suite file must contain a non-empty list of entries")
    variants = list(doc.get("variants", VARIANTS)) if isinstance(doc, dict) else list(VARIANTS)
    for v in variants:
        if v not in VARIANTS:
            raise ValueError(f"unknown variant {v!r}")
    jobs = []
    for i, e in enumerate(entries):
        if not isinstance(e, dict):
            raise ValueError(f"entry {i} is not a mapping")
        missing = {"n", "k", "l", "seeds"} - set(e)
        if not e.get("planted") and "p" not in e:
            missing.add("p")
        if missing:
            raise ValueError(f"entry {i} lacks {sorted(missing)}")
        seeds = e["seeds"]
        seeds = list(range(seeds)) if isinstance(seeds, int) else list(seeds)
        for seed in seeds:
            jobs.append({"n": int(e["n"]), "p": float(e.get("p", 0.0)), "k": int(e["k"]),
                         "l": int(e["l"]), "seed": int(seed), "planted": bool(e.get("planted")),
                         "variants": variants})
    return jobs


def run_job(job: dict) -> list[dict]:
    if job["planted"]:
        g, _ = planted(job["n"], job["k"], job["l"], job["seed"])
        name = f"planted-n{job['n']}-k{job['k']}-l{job['l']}-s{job['seed']}"
    else:
        g = erdos_renyi(job["n"], job["p"], job["seed"])
        name = f"er-n{job['n']}-p{job['p']}-k{job['k']}-l{job['l']}-s{job['seed']}"
    inst = PvcInstance(g, job["k"], job["l"])
    rows = []
    for variant in job["variants"]:
        outcome, report = run(inst, variant, with_oracle=g.n <= ORACLE_AUTO_N)
        rows.append(csv_row(name, report, outcome))
    return rows


def summarize(rows: list[dict]) -> list[dict]:
    out = []
    for variant in dict.fromkeys(r["variant"] for r in rows):
        sel = [r for r in rows if r["variant"] == variant]
        mean = sum(r["kernel_n"] for r in sel) / len(sel)
        agg = {h: "" for h in CSV_HEADER}
        agg.update(instance="mean", variant=variant, kernel_n=round(mean, 4),
                   bound_ok=all(r["bound_ok"] for r in sel),
                   time_ms=round(sum(r["time_ms"] for r in sel) / len(sel), 3))
        checked = [r["oracle_agree"] for r in sel if r["oracle_agree"] != ""]
        agg["oracle_agree"] = all(checked) if checked else ""
        out.append(agg)
    return out


def cmd_bench(args) -> int:
    try:
        jobs = load_suite(args.suite)
    except (OSError, ValueError, yaml.YAMLError) as exc:
        print(f"error: suite {args.suite}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            batches = list(pool.map(run_job, jobs, chunksize=8))
    else:
        batches = [run_job(j) for j in jobs]
    rows = [r for batch in batches for r in batch]
    fh = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=CSV_HEADER)
        writer.writeheader()
        writer.writerows(rows)
        writer.writerows(summarize(rows))
    finally:
        if fh is not sys.stdout:
            fh.close()
    if any(r["oracle_agree"] is False for r in rows):
        print("error: oracle disagreement in suite", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pvc-kernel", description="Partial Vertex Cover kernelization")
    parser.add_argument("-v", "--verbose", action="store_true", help="log rule applications")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernelize", help="kernelize one instance and print a JSON report")
    p.add_argument("--input", required=True, help="graph in DIMACS edge format")
    p.add_argument("-k", type=_nonneg, required=True, help="deletion budget")
    p.add_argument("-l", type=_nonneg, required=True, help="allowed remaining edges")
    p.add_argument("--variant", choices=VARIANTS, default="additive")
    p.add_argument("--oracle-check", action="store_true",
                   help="cross-check against brute force (small instances only)")
    p.add_argument("--json", help="also write the report to this path")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("gen", help="generate a seeded instance")
    gsub = p.add_subparsers(dest="model", required=True)
    er = gsub.add_parser("er", help="Erdos-Renyi G(n, p)")
    er.add_argument("--n", type=_nonneg, required=True)
    er.add_argument("--p", type=_prob, required=True)
    er.add_argument("--seed", type=int, required=True)
    er.add_argument("--out", help="output path (default stdout); writes <out>.json alongside")
    pl = gsub.add_parser("planted", help="planted yes-instance")
    pl.add_argument("--n", type=_nonneg, required=True)
    pl.add_argument("--k", type=_nonneg, required=True)
    pl.add_argument("--l", type=_nonneg, required=True)
    pl.add_argument("--seed", type=int, required=True)
    pl.add_argument("--out", help="output path (default stdout); writes <out>.json alongside")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a suite and print CSV")
    p.add_argument("--suite", required=True, help="YAML or JSON suite file")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

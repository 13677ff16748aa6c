"""Command-line front end.

    ulocal run --scenario fig4.json --out results/
    ulocal run --suite paper --out results/ --parallel 4
    ulocal analyze --plant sigma1

`run` writes one CSV trace and one metrics JSON per scenario (plus a suite
summary when running the bundled suite) into --out, which defaults to the
ULOCAL_OUT environment variable or the current directory.  Exit codes:
0 success, 2 missing input file, 3 validation/schema failure, 4 at least
one scenario diverged.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

from .engine import Scenario, run_closed_loop
from .errors import ScenarioError
from .lti import dc_gain, is_minimum_phase, poles, zeros
from .plants import PLANT_LIBRARY
from .scenario_io import (
    load_scenario,
    metrics_document,
    plant_from_doc,
    scenario_from_dict,
    write_metrics_json,
    write_trace_csv,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISSING_FILE = 2
EXIT_VALIDATION = 3
EXIT_DIVERGED = 4


def _suite_dir():
    return resources.files("ulocal") / "scenarios"


def load_suite() -> list[Scenario]:
    """The bundled reproduction suite, in manifest order."""
    base = _suite_dir()
    manifest = json.loads((base / "MANIFEST.json").read_text(encoding="utf-8"))
    out = []
    for entry in manifest["scenarios"]:
        doc = json.loads((base / entry["file"]).read_text(encoding="utf-8"))
        out.append(scenario_from_dict(doc))
    return out


def suite_manifest() -> dict:
    return json.loads((_suite_dir() / "MANIFEST.json").read_text(encoding="utf-8"))


def _resolve_out_dir(arg: str | None) -> Path:
    out = Path(arg or os.environ.get("ULOCAL_OUT") or ".")
    out.mkdir(parents=True, exist_ok=True)
    return out


def _run_one(scenario: Scenario, out_dir: Path) -> dict:
    trace = run_closed_loop(scenario)
    csv_path = out_dir / f"{scenario.label}.csv"
    write_trace_csv(trace, csv_path)
    write_metrics_json(scenario, trace.metrics,
                       out_dir / f"{scenario.label}.metrics.json")
    doc = metrics_document(scenario, trace.metrics)
    doc["csv"] = csv_path.name
    return doc


def _fmt_opt(value, scale=1.0) -> str:
    return "-" if value is None else f"{value * scale:.3f}"


def _print_table(results: list[dict], file=None) -> None:
    file = file or sys.stdout
    header = (f"{'scenario':<18s} {'diverged':<9s} {'iae':>12s} {'max|u|':>10s} "
              f"{'settle[ms]':>11s} {'recovery[ms]':>14s}")
    print(header, file=file)
    print("-" * len(header), file=file)
    for doc in results:
        rec = ",".join(_fmt_opt(r, 1e3) for r in doc["post_switch_recovery"]) or "-"
        print(
            f"{doc['label']:<18s} {str(doc['diverged']):<9s} {doc['iae']:>12.4e} "
            f"{doc['max_abs_u']:>10.3f} {_fmt_opt(doc['settling_time'], 1e3):>11s} "
            f"{rec:>14s}",
            file=file,
        )


def cmd_run(args) -> int:
    if args.scenario is not None:
        path = Path(args.scenario)
        if not path.exists():
            print(f"error: scenario file not found: {path}", file=sys.stderr)
            return EXIT_MISSING_FILE
        scenarios = [load_scenario(path)]
    else:
        if args.suite != "paper":
            print(f"error: unknown suite {args.suite!r} (available: paper)",
                  file=sys.stderr)
            return EXIT_VALIDATION
        scenarios = load_suite()

    if args.ts is not None:
        if args.ts <= 0:
            raise ScenarioError("--ts must be positive")
        scenarios = [dataclasses.replace(sc, ts=args.ts) for sc in scenarios]
        for sc in scenarios:
            sc.validate()

    out_dir = _resolve_out_dir(args.out)
    if args.parallel > 1:
        with ThreadPoolExecutor(max_workers=args.parallel) as pool:
            results = list(pool.map(lambda sc: _run_one(sc, out_dir), scenarios))
    else:
        results = [_run_one(sc, out_dir) for sc in scenarios]

    _print_table(results)
    if args.suite is not None:
        summary = {"suite": args.suite, "results": results}
        with open(out_dir / "suite_summary.json", "w", encoding="utf-8",
                  newline="\n") as fh:
            json.dump(summary, fh, indent=2)
            fh.write("\n")
        print(f"wrote {len(results)} scenario outputs to {out_dir}")

    if any(doc["diverged"] for doc in results):
        print("error: at least one scenario diverged", file=sys.stderr)
        return EXIT_DIVERGED
    return EXIT_OK


def _load_plant(spec: str):
    if spec in PLANT_LIBRARY:
        return PLANT_LIBRARY[spec]
    path = Path(spec)
    if not path.exists():
        raise FileNotFoundError(
            f"{spec!r} is neither a built-in plant nor an existing file "
            f"(built-ins: {', '.join(sorted(PLANT_LIBRARY))})"
        )
    doc = json.loads(path.read_text(encoding="utf-8"))
    return plant_from_doc(doc)


def cmd_analyze(args) -> int:
    plant = _load_plant(args.plant)
    print(f"plant: {plant.name} (order {plant.order})")
    print("poles:", ", ".join(f"{p:.6g}" for p in poles(plant)))
    zs = zeros(plant)
    print("zeros:", ", ".join(f"{z:.6g}" for z in zs) if zs.size else "(none)")
    try:
        print(f"dc_gain: {dc_gain(plant):.9g}")
    except ValueError:
        print("dc_gain: undefined (pole at s = 0)")
    verdict = "minimum phase" if is_minimum_phase(plant) else "non-minimum phase"
    print(f"classification: {verdict}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulocal",
        description="Closed-loop simulation runner for model-free control "
                    "of non-minimum-phase and switched plants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one scenario file or the bundled suite")
    which = run_p.add_mutually_exclusive_group(required=True)
    which.add_argument("--scenario", help="path to a scenario JSON file")
    which.add_argument("--suite", help="bundled suite name (paper)")
    run_p.add_argument("--out", help="output directory (default: $ULOCAL_OUT or .)")
    run_p.add_argument("--parallel", type=int, default=1, metavar="N",
                       help="run up to N scenarios concurrently")
    run_p.add_argument("--ts", type=float, help="override the sample period [s]")
    run_p.set_defaults(func=cmd_run)

    an_p = sub.add_parser("analyze", help="print pole/zero/gain analysis of a plant")
    an_p.add_argument("--plant", required=True,
                      help="built-in plant name or path to a plant JSON file")
    an_p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISSING_FILE
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())

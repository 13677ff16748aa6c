#!/usr/bin/env python3
"""Render the trace CSVs in a results directory as PNGs.

    ulocal run --suite paper --out out/
    python scripts/plot_suite.py out/

One figure per scenario: output vs reference on top, control input below.
"""
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from ulocal.scenario_io import read_trace_csv


def plot_one(csv_path: Path) -> Path:
    tr = read_trace_csv(csv_path)
    fig, (ax_y, ax_u) = plt.subplots(
        2, 1, sharex=True, figsize=(8, 5),
        gridspec_kw={"height_ratios": [2, 1]})
    ax_y.plot(tr.t, tr.r, "k--", lw=1.0, label="reference")
    ax_y.plot(tr.t, tr.y, "b-", lw=1.2, label="output")
    ax_y.set_ylabel("y")
    ax_y.legend(loc="best", fontsize=8)
    ax_y.grid(alpha=0.3)
    ax_u.plot(tr.t, tr.u, "r-", lw=0.9)
    ax_u.set_ylabel("u")
    ax_u.set_xlabel("t [s]")
    ax_u.grid(alpha=0.3)
    # mark plant switches
    for k in range(1, len(tr)):
        if tr.plant_id[k] != tr.plant_id[k - 1]:
            for ax in (ax_y, ax_u):
                ax.axvline(tr.t[k], color="g", ls=":", lw=1.0)
    fig.suptitle(csv_path.stem)
    out = csv_path.with_suffix(".png")
    fig.tight_layout()
    fig.savefig(out, dpi=130)
    plt.close(fig)
    return out


def main():
    if len(sys.argv) != 2:
        sys.exit(f"usage: {sys.argv[0]} <results-dir>")
    results = Path(sys.argv[1])
    csvs = sorted(results.glob("*.csv"))
    if not csvs:
        sys.exit(f"no CSV traces in {results}")
    for p in csvs:
        print("wrote", plot_one(p))


if __name__ == "__main__":
    main()

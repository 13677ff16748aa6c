#!/usr/bin/env python3
"""Regenerate the bundled scenario suite from the calibrated constants.

The gains, sample periods, reference parameters, and durations below are
the frozen outputs of scripts/calibrate_gains.py.  Rerun this after any
recalibration so the JSON files and manifest stay the single source of
truth for the shipped suite.
"""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "ulocal" / "scenarios"

BROIDA = {"K": 4.0, "T": 2.018, "tau": 0.2424}


def broida_gains(K, T, tau):
    return (100.0 * (0.4 * tau + T) / (120.0 * K * tau),
            1.0 / (1.33 * K * tau),
            0.35 * T / K)


KP, KI, KD = broida_gains(**BROIDA)

# benchmark-plant comparison: incremental model-free law, gains calibrated
# on the nominal plant at ts = 1e-3
IPI_BENCH = {"type": "ipi", "alpha": 20.0, "kp": 1.0, "ki": 0.1, "order": 1}
PID_BENCH = {"type": "pid", "kp": KP, "ki": KI, "kd": KD}

STEP_REF = {"kind": "step", "amplitude": 1.0}
EXP = {"kind": "exponential", "amplitude": 10.0}

SCENARIOS = [
    # -- benchmark plant: nominal and aged-pole runs -------------------------
    {
        "label": "a1_nominal",
        "plants": ["triple_lag"],
        "controller": IPI_BENCH,
        "reference": STEP_REF,
        "ts": 1e-3,
        "duration": 20.0,
    },
    {
        "label": "a2_aged",
        "plants": ["triple_lag_aged"],
        "controller": IPI_BENCH,
        "reference": STEP_REF,
        "ts": 1e-3,
        "duration": 20.0,
    },
    # -- derivative-feedback law on the switched-system set ------------------
    {
        "label": "fig3",
        "plants": ["sigma1"],
        "controller": {"type": "istar_pi", "lam": 0.03333333333333333,
                       "delta1": 3e-4, "delta2": 0.0, "ki": 30.0},
        "reference": dict(EXP, time_constant=2e-3),
        "ts": 5e-5,
        "duration": 0.01,
        "estimator_smoothing": 0.95,
    },
    {
        "label": "fig4",
        "plants": ["sigma1", "sigma2"],
        "switch_times": [5e-3],
        "controller": {"type": "istar_pi", "lam": 3e-3,
                       "delta1": 1e-3, "delta2": 0.0, "ki": 40.0},
        "reference": dict(EXP, time_constant=3e-3),
        "ts": 1e-4,
        "duration": 0.01,
        "estimator_smoothing": 0.98,
    },
    {
        "label": "fig5",
        "plants": ["sigma1"],
        "controller": {"type": "istar_pi", "lam": 0.03333333333333333,
                       "delta1": 3e-4, "delta2": 0.0, "ki": 6.0},
        "reference": {"kind": "exponential", "amplitude": 100.0,
                      "time_constant": 2e-3},
        "disturbance": {"kind": "sinusoid", "amplitude": 5.0, "period": 5e-5},
        "ts": 5e-5,
        "duration": 0.02,
        "estimator_smoothing": 0.95,
    },
    {
        "label": "fig6",
        "plants": ["sigma1", "sigma3"],
        "switch_times": [5e-3],
        "controller": {"type": "istar_pi", "lam": 0.03,
                       "delta1": 1e-4, "delta2": 0.0, "ki": 30.0},
        "reference": dict(EXP, time_constant=1.5e-3),
        "ts": 5e-5,
        "duration": 0.02,
        "estimator_smoothing": 0.98,
    },
    {
        "label": "fig7",
        "plants": ["sigma1", "sigma4"],
        "switch_times": [1.5e-3],
        "controller": {"type": "istar_pi", "lam": 0.1,
                       "delta1": 1e-4, "delta2": 0.0, "ki": 40.0},
        "reference": dict(EXP, time_constant=2e-3),
        "ts": 1e-4,
        "duration": 0.02,
        "estimator_smoothing": 0.99,
    },
    {
        "label": "fig8",
        "plants": ["sigma1", "sigma2"],
        "switch_times": [3e-3],
        "controller": {"type": "istar_pi", "lam": 0.03333333333333333,
                       "delta1": 3e-4, "delta2": 0.0, "ki": 25.0},
        "reference": {"kind": "sinusoid", "amplitude": 10.0, "frequency": 10.0},
        "ts": 5e-5,
        "duration": 0.025,
        "estimator_smoothing": 0.95,
    },
    {
        "label": "fig9",
        "plants": ["sigma1", "sigma3"],
        "switch_times": [3e-3],
        "controller": {"type": "istar_pi", "lam": 0.1,
                       "delta1": 1e-4, "delta2": 0.0, "ki": 25.0},
        "reference": {"kind": "sinusoid", "amplitude": 10.0, "frequency": 10.0},
        "ts": 5e-5,
        "duration": 0.025,
        "estimator_smoothing": 0.95,
    },
]

# runnable but not part of the suite: PID counterparts of a1/a2
EXTRAS = [
    {
        "label": "a1_nominal_pid",
        "plants": ["triple_lag"],
        "controller": PID_BENCH,
        "reference": STEP_REF,
        "ts": 1e-3,
        "duration": 20.0,
    },
    {
        "label": "a2_aged_pid",
        "plants": ["triple_lag_aged"],
        "controller": PID_BENCH,
        "reference": STEP_REF,
        "ts": 1e-3,
        "duration": 20.0,
    },
]

DESCRIPTIONS = {
    "a1_nominal": "benchmark plant, model-free incremental law, unit step",
    "a2_aged": "benchmark plant with pole aged 1 -> 1.5, same controller",
    "fig3": "sigma1, exponential reference",
    "fig4": "exponential reference, sigma1 switches to sigma2 at 5 ms",
    "fig5": "sigma1, exponential reference, sinusoidal input disturbance",
    "fig6": "exponential reference, sigma1 switches to sigma3 at 5 ms",
    "fig7": "exponential reference, sigma1 switches to sigma4 at 1.5 ms",
    "fig8": "sinusoidal reference, sigma1 switches to sigma2 at 3 ms",
    "fig9": "sinusoidal reference, sigma1 switches to sigma3 at 3 ms",
}

IDS = {
    "a1_nominal": "A1", "a2_aged": "A2", "fig3": "B1", "fig4": "B2",
    "fig5": "B3", "fig6": "B4", "fig7": "B5", "fig8": "B6", "fig9": "B7",
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = {"suite": "paper", "scenarios": []}
    for doc in SCENARIOS:
        path = OUT / f"{doc['label']}.json"
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        manifest["scenarios"].append({
            "id": IDS[doc["label"]],
            "label": doc["label"],
            "file": path.name,
            "description": DESCRIPTIONS[doc["label"]],
        })
        print(f"wrote {path}")
    for doc in EXTRAS:
        path = OUT / f"{doc['label']}.json"
        path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {path} (extra, not in suite)")
    mpath = OUT / "MANIFEST.json"
    mpath.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {mpath}")


if __name__ == "__main__":
    main()

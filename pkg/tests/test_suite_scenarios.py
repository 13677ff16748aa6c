"""Regression facts for the bundled suite: each scenario's headline metrics
as produced by the frozen calibration.  Loose bounds, so only a genuine
behavior change (not floating-point jitter) trips them."""
import numpy as np
import pytest

from ulocal.cli import load_suite, suite_manifest
from ulocal.engine import run_closed_loop


@pytest.fixture(scope="module")
def suite_metrics():
    out = {}
    for sc in load_suite():
        out[sc.label] = (sc, run_closed_loop(sc).metrics)
    return out


def test_no_scenario_diverges(suite_metrics):
    for label, (_, m) in suite_metrics.items():
        assert not m.diverged, label


def test_every_scenario_settles(suite_metrics):
    for label, (_, m) in suite_metrics.items():
        assert m.settling_time is not None, label


def test_benchmark_scenarios_settle_within_a_second(suite_metrics):
    for label in ("a1_nominal", "a2_aged"):
        _, m = suite_metrics[label]
        assert m.settling_time < 1.0


def test_exponential_tracking_settles_within_run(suite_metrics):
    sc, m = suite_metrics["fig3"]
    assert m.settling_time < sc.duration
    assert m.max_abs_u < 100.0


def test_fig4_recovery_under_five_ms(suite_metrics):
    _, m = suite_metrics["fig4"]
    assert m.post_switch_recovery[0] < 5e-3


def test_switch_recoveries_fit_run(suite_metrics):
    for label in ("fig4", "fig6", "fig7", "fig8", "fig9"):
        sc, m = suite_metrics[label]
        rec = m.post_switch_recovery[0]
        assert rec is not None, label
        assert rec < sc.duration - sc.switch_times[0], label


def test_disturbance_scenario_holds_band(suite_metrics):
    sc, m = suite_metrics["fig5"]
    assert m.settling_time is not None
    # 2% settle implies the 10% disturbance-rejection band with margin
    assert m.settling_time < 0.6 * sc.duration


def test_bounded_control_everywhere(suite_metrics):
    for label, (_, m) in suite_metrics.items():
        assert m.max_abs_u < 100.0, label


def test_manifest_descriptions_match_files():
    man = suite_manifest()
    labels = {sc.label for sc in load_suite()}
    assert {e["label"] for e in man["scenarios"]} == labels

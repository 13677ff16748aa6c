"""Backward-difference derivative estimator."""
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ulocal.errors import SimulationFault
from ulocal.estimator import DerivativeEstimator

TS = 1e-3


def feed(est, samples):
    out = None
    for y in samples:
        out = est.push(y)
    return out


def test_warmup_returns_zero():
    est = DerivativeEstimator(TS)
    assert est.push(5.0) == (0.0, 0.0)
    d1, d2 = est.push(6.0)
    assert d1 != 0.0 and d2 == 0.0


def test_constant_signal():
    est = DerivativeEstimator(TS)
    d1, d2 = feed(est, [3.0] * 10)
    assert d1 == 0.0
    assert d2 == 0.0


def test_ramp_exact():
    est = DerivativeEstimator(TS)
    t = np.arange(10) * TS
    d1, d2 = feed(est, t)  # y = t
    assert d1 == pytest.approx(1.0, rel=1e-12)
    assert d2 == pytest.approx(0.0, abs=1e-9)


def test_quadratic_exact_second_biased_first():
    est = DerivativeEstimator(TS)
    k = np.arange(20)
    t = k * TS
    d1, d2 = feed(est, t ** 2)
    assert d2 == pytest.approx(2.0, rel=1e-9)
    # backward difference of t^2 gives 2 t - Ts
    assert d1 == pytest.approx(2.0 * t[-1] - TS, rel=1e-9)


@given(a=st.floats(-10, 10), b=st.floats(-10, 10))
def test_linearity(a, b):
    y1 = np.array([0.1, -0.3, 0.7, 1.9, -2.2, 0.5])
    y2 = np.array([1.0, 0.4, -0.8, 0.2, 0.9, -1.5])
    e1 = DerivativeEstimator(TS)
    e2 = DerivativeEstimator(TS)
    ec = DerivativeEstimator(TS)
    r1 = feed(e1, y1)
    r2 = feed(e2, y2)
    rc = feed(ec, a * y1 + b * y2)
    assert rc[0] == pytest.approx(a * r1[0] + b * r2[0], rel=1e-9, abs=1e-7)
    assert rc[1] == pytest.approx(a * r1[1] + b * r2[1], rel=1e-9, abs=1e-4)


@given(beta=st.floats(min_value=0.1, max_value=0.95))
def test_smoothing_convex_combination(beta):
    # smoothed estimate stays within [min, max] of the raw estimate history
    rng = np.random.default_rng(7)
    ys = rng.normal(size=30)
    raw = DerivativeEstimator(TS, smoothing=0.0)
    smooth = DerivativeEstimator(TS, smoothing=beta)
    raws = []
    for y in ys:
        raws.append(raw.push(y)[0])
        sm = smooth.push(y)[0]
        assert min(raws) - 1e-9 <= sm <= max(raws) + 1e-9


def test_nonfinite_input_faults():
    est = DerivativeEstimator(TS)
    with pytest.raises(SimulationFault):
        est.push(float("nan"))


def test_reset():
    est = DerivativeEstimator(TS)
    feed(est, [1.0, 2.0, 4.0])
    est.reset()
    assert est.push(1.0) == (0.0, 0.0)


def test_parameter_validation():
    with pytest.raises(ValueError):
        DerivativeEstimator(0.0)
    with pytest.raises(ValueError):
        DerivativeEstimator(TS, order=3)
    with pytest.raises(ValueError):
        DerivativeEstimator(TS, window=1)
    with pytest.raises(ValueError):
        DerivativeEstimator(TS, smoothing=1.0)


def test_order_one_reports_zero_second_derivative():
    est = DerivativeEstimator(TS, order=1)
    d1, d2 = feed(est, np.arange(5.0) ** 2)
    assert d2 == 0.0
    assert d1 != 0.0

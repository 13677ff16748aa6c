"""Reference/disturbance generators and their analytic derivatives."""
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ulocal.signals import DisturbanceSpec, ReferenceSpec


def test_exponential_at_zero():
    ref = ReferenceSpec(kind="exponential", amplitude=10.0, time_constant=5e-4)
    r, d1, d2 = ref.sample(0.0)
    assert r == 0.0
    assert d1 == pytest.approx(10.0 / 5e-4)
    assert d2 == pytest.approx(-10.0 / 5e-4 ** 2)


def test_exponential_limit():
    ref = ReferenceSpec(kind="exponential", amplitude=3.0, time_constant=1e-3)
    r, d1, d2 = ref.sample(1.0)  # t = 1000 tau
    assert r == pytest.approx(3.0)
    assert d1 == pytest.approx(0.0, abs=1e-12)
    assert d2 == pytest.approx(0.0, abs=1e-12)


def test_sinusoid_at_zero():
    ref = ReferenceSpec(kind="sinusoid", amplitude=2.0, frequency=50.0)
    r, d1, d2 = ref.sample(0.0)
    assert r == 0.0
    assert d1 == pytest.approx(2.0 * 2.0 * math.pi * 50.0)
    assert d2 == pytest.approx(0.0, abs=1e-9)


def test_step_reference():
    ref = ReferenceSpec(kind="step", amplitude=1.0, offset=0.5)
    assert ref.sample(0.0) == (1.5, 0.0, 0.0)
    assert ref.sample(3.0) == (1.5, 0.0, 0.0)


@given(t=st.floats(min_value=1e-6, max_value=2e-3))
def test_exponential_derivative_consistency(t):
    # returned first derivative matches a central difference of the returned value
    ref = ReferenceSpec(kind="exponential", amplitude=10.0, time_constant=5e-4)
    h = 1e-8
    d_num = (ref.sample(t + h)[0] - ref.sample(t - h)[0]) / (2 * h)
    assert d_num == pytest.approx(ref.sample(t)[1], rel=1e-4)


def test_reference_validation():
    with pytest.raises(ValueError):
        ReferenceSpec(kind="exponential", amplitude=1.0)
    with pytest.raises(ValueError):
        ReferenceSpec(kind="exponential", amplitude=1.0, time_constant=-1.0)
    with pytest.raises(ValueError):
        ReferenceSpec(kind="sinusoid", amplitude=1.0)
    with pytest.raises(ValueError):
        ReferenceSpec(kind="ramp", amplitude=1.0)


def test_disturbance_values():
    d = DisturbanceSpec(kind="sinusoid", amplitude=5.0, period=5e-5)
    assert d.sample(0.0) == pytest.approx(5.0)
    assert d.sample(2.5e-5) == pytest.approx(-5.0)
    assert d.sample(5e-5) == pytest.approx(5.0)


def test_disturbance_none():
    d = DisturbanceSpec(kind="none")
    assert d.sample(0.0) == 0.0
    assert d.sample(123.4) == 0.0


@given(t=st.floats(min_value=0.0, max_value=1.0))
def test_disturbance_bounded(t):
    d = DisturbanceSpec(kind="sinusoid", amplitude=5.0, period=5e-5)
    assert abs(d.sample(t)) <= 5.0 + 1e-12


def test_disturbance_validation():
    with pytest.raises(ValueError):
        DisturbanceSpec(kind="sinusoid", amplitude=1.0)
    with pytest.raises(ValueError):
        DisturbanceSpec(kind="sinusoid", amplitude=1.0, period=0.0)

"""lti module: conversions, analysis, ZOH discretization, stepping.

Transfer-function expectations come from an independent symbolic oracle
(sympy expansion of C (sI - A)^-1 B), cross-checked pointwise; step
responses are checked against a partial-fraction analytic solution.
"""
import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from ulocal.errors import SimulationFault
from ulocal.lti import (
    StateSpaceModel,
    TransferFunction,
    dc_gain,
    discretize_zoh,
    is_minimum_phase,
    poles,
    ss_to_tf,
    tf_to_ss,
    zeros,
)
from ulocal.plants import PLANT_LIBRARY, SIGMA1, SIGMA2, SIGMA3, SIGMA4, TRIPLE_LAG


def symbolic_tf(m):
    """Oracle: exact rational C (sI-A)^-1 B + D via sympy, monic denominator."""
    s = sympy.symbols("s")
    A = sympy.Matrix(m.A.tolist())
    B = sympy.Matrix([[v] for v in m.B])
    C = sympy.Matrix([list(m.C)])
    n = A.shape[0]
    g = sympy.cancel((C * (s * sympy.eye(n) - A).inv() * B)[0, 0] + m.D)
    num, den = sympy.fraction(sympy.together(g))
    num_c = [float(c) for c in sympy.Poly(num, s).all_coeffs()]
    den_c = [float(c) for c in sympy.Poly(den, s).all_coeffs()]
    lead = den_c[0]
    return [c / lead for c in num_c], [c / lead for c in den_c]


def rational_eval(m, s):
    """Oracle: evaluate C (sI-A)^-1 B + D numerically at one point."""
    n = m.order
    sol = np.linalg.solve(s * np.eye(n) - m.A, m.B)
    return complex(m.C @ sol + m.D)


@pytest.mark.parametrize("plant", [SIGMA1, SIGMA2, SIGMA3, SIGMA4])
def test_ss_to_tf_matches_symbolic_oracle(plant):
    tf = ss_to_tf(plant)
    num_ref, den_ref = symbolic_tf(plant)
    assert tf.num == pytest.approx(num_ref, rel=1e-9)
    assert tf.den == pytest.approx(den_ref, rel=1e-9)


def test_sigma1_transfer_function_values():
    tf = ss_to_tf(SIGMA1)
    assert tf.num == pytest.approx([-2e5, 1e9], rel=1e-9)
    assert tf.den == pytest.approx([1.0, 5000.0, 1e8], rel=1e-9)


def test_sigma4_transfer_function_values():
    tf = ss_to_tf(SIGMA4)
    assert tf.num == pytest.approx([1e5, 1.55e9], rel=1e-9)
    assert tf.den == pytest.approx([1.0, 1500.0, 2.8e7], rel=1e-9)


def test_pure_integrator():
    m = StateSpaceModel(A=[[0.0]], B=[1.0], C=[1.0])
    tf = ss_to_tf(m)
    assert tf.num == pytest.approx([1.0], abs=1e-12)
    assert tf.den == pytest.approx([1.0, 0.0], abs=1e-12)


def test_symbolic_oracle_self_check():
    # the oracle itself agrees with direct rational evaluation at s = 1, 10, 100
    num, den = symbolic_tf(SIGMA1)
    for s in (1.0, 10.0, 100.0):
        direct = rational_eval(SIGMA1, s)
        from_poly = np.polyval(num, s) / np.polyval(den, s)
        assert from_poly == pytest.approx(direct.real, rel=1e-12)


def test_tf_to_ss_triple_lag_realization():
    tf = TransferFunction(num=[1.0, 4.0, 4.0], den=[1.0, 3.0, 3.0, 1.0])
    m = tf_to_ss(tf)
    assert m.order == 3
    back = ss_to_tf(m)
    assert back.den == pytest.approx([1.0, 3.0, 3.0, 1.0], rel=1e-9)
    assert back.num == pytest.approx([1.0, 4.0, 4.0], rel=1e-9)


def test_tf_to_ss_first_order():
    m = tf_to_ss(TransferFunction(num=[1.0], den=[1.0, 1.0]))
    assert m.A.ravel() == pytest.approx([-1.0])
    assert m.B == pytest.approx([1.0])
    assert m.C == pytest.approx([1.0])
    assert m.D == 0.0


def test_round_trip_sigma2_pointwise():
    rng = np.random.default_rng(42)
    tf = ss_to_tf(SIGMA2)
    m2 = tf_to_ss(tf)
    for _ in range(20):
        s = complex(rng.uniform(-1e4, 1e4), rng.uniform(-1e4, 1e4))
        want = rational_eval(SIGMA2, s)
        got = rational_eval(m2, s)
        assert got == pytest.approx(want, rel=1e-8)


@pytest.mark.parametrize("plant", [SIGMA1, SIGMA2, SIGMA3, SIGMA4])
def test_round_trip_coefficients_stable(plant):
    tf1 = ss_to_tf(plant)
    tf2 = ss_to_tf(tf_to_ss(tf1))
    assert tf2.num == pytest.approx(tf1.num, rel=1e-9)
    assert tf2.den == pytest.approx(tf1.den, rel=1e-9)


def test_improper_tf_rejected():
    with pytest.raises(ValueError, match="improper"):
        TransferFunction(num=[1.0, 0.0, 0.0], den=[1.0, 1.0])


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        StateSpaceModel(A=[[0.0, 1.0], [0.0, 0.0]], B=[1.0], C=[1.0, 0.0])
    with pytest.raises(ValueError, match="square"):
        StateSpaceModel(A=[[0.0, 1.0]], B=[1.0], C=[1.0])


# -- analysis ---------------------------------------------------------------

def test_sigma1_analysis():
    z = zeros(SIGMA1)
    assert z.size == 1
    assert z[0] == pytest.approx(5000.0, rel=1e-9)
    assert dc_gain(SIGMA1) == pytest.approx(10.0, rel=1e-9)
    assert not is_minimum_phase(SIGMA1)
    p = sorted(poles(SIGMA1), key=lambda v: v.imag)
    assert p[0] == pytest.approx(complex(-2500.0, -9682.458365518543), rel=1e-9)
    assert p[1] == pytest.approx(complex(-2500.0, 9682.458365518543), rel=1e-9)


def test_sigma_classification():
    assert zeros(SIGMA2)[0] == pytest.approx(69e7 / 26e4, rel=1e-9)  # +2653.846...
    assert not is_minimum_phase(SIGMA2)
    assert zeros(SIGMA3)[0] == pytest.approx(-251e7 / 26e4, rel=1e-9)  # -9653.846...
    assert is_minimum_phase(SIGMA3)
    assert zeros(SIGMA4)[0] == pytest.approx(-15500.0, rel=1e-9)
    assert is_minimum_phase(SIGMA4)


def test_triple_lag_analysis():
    z = sorted(zeros(TRIPLE_LAG), key=lambda v: v.real)
    assert len(z) == 2
    for zi in z:
        assert zi == pytest.approx(-2.0, abs=1e-4)  # double root, reduced accuracy
    for pi in poles(TRIPLE_LAG):
        assert pi == pytest.approx(-1.0, abs=1e-4)  # triple root
    assert dc_gain(TRIPLE_LAG) == pytest.approx(4.0, rel=1e-9)
    assert is_minimum_phase(TRIPLE_LAG)


def test_dc_gain_pole_at_origin():
    m = StateSpaceModel(A=[[0.0]], B=[1.0], C=[1.0])
    with pytest.raises(ValueError, match="pole at s = 0"):
        dc_gain(m)


# -- ZOH discretization ------------------------------------------------------

def test_zoh_nilpotent():
    m = StateSpaceModel(A=[[0.0, 0.0], [0.0, 0.0]], B=[2.0, 3.0], C=[1.0, 0.0])
    d = discretize_zoh(m, 0.25)
    assert d.Ad == pytest.approx(np.eye(2))
    assert d.Bd == pytest.approx([0.5, 0.75])


def test_zoh_scalar_closed_form():
    m = StateSpaceModel(A=[[-1.0]], B=[1.0], C=[1.0])
    d = discretize_zoh(m, 0.1)
    assert d.Ad[0, 0] == pytest.approx(math.exp(-0.1), rel=1e-12)
    assert d.Bd[0] == pytest.approx(1.0 - math.exp(-0.1), rel=1e-12)


@given(a=st.floats(min_value=-50.0, max_value=-0.01),
       ts=st.floats(min_value=1e-4, max_value=0.5))
def test_zoh_scalar_closed_form_property(a, ts):
    m = StateSpaceModel(A=[[a]], B=[1.0], C=[1.0])
    d = discretize_zoh(m, ts)
    assert d.Ad[0, 0] == pytest.approx(math.exp(a * ts), rel=1e-11)
    assert d.Bd[0] == pytest.approx((math.exp(a * ts) - 1.0) / a, rel=1e-11)


@pytest.mark.parametrize("plant", [SIGMA1, SIGMA2, SIGMA3, SIGMA4])
@pytest.mark.parametrize("ts", [1e-5, 1e-6, 1e-7])
def test_spectral_mapping(plant, ts):
    d = discretize_zoh(plant, ts)
    lam_c = np.sort_complex(np.linalg.eigvals(plant.A))
    lam_d = np.sort_complex(np.linalg.eigvals(d.Ad))
    assert lam_d == pytest.approx(np.exp(lam_c * ts), rel=1e-9)


@pytest.mark.parametrize("plant", list(PLANT_LIBRARY.values()))
def test_stability_preserved(plant):
    assert np.all(np.linalg.eigvals(plant.A).real < 0)
    d = discretize_zoh(plant, 1e-6)
    assert np.max(np.abs(np.linalg.eigvals(d.Ad))) < 1.0


def test_zoh_rejects_bad_ts():
    with pytest.raises(ValueError):
        discretize_zoh(SIGMA1, 0.0)
    with pytest.raises(ValueError):
        discretize_zoh(SIGMA1, -1e-6)


# -- stepping ----------------------------------------------------------------

def analytic_step_response(num, den, t):
    """Partial-fraction inverse transform of num/(den * s) for distinct poles."""
    full_den = np.polymul(den, [1.0, 0.0])
    roots = np.roots(full_den)
    dden = np.polyder(full_den)
    y = np.zeros_like(t, dtype=complex)
    for p in roots:
        y += np.polyval(num, p) / np.polyval(dden, p) * np.exp(p * t)
    return y.real


def test_plant_step_zero_input():
    d = discretize_zoh(SIGMA1, 1e-6)
    assert d.step(0.0) == 0.0
    assert d.x == pytest.approx(np.zeros(2))


def test_plant_step_matches_analytic_step_response():
    d = discretize_zoh(SIGMA1, 1e-6)
    tf = ss_to_tf(SIGMA1)
    n = 100
    y_sim = np.array([d.step(1.0) for _ in range(n)])
    t = np.arange(n) * 1e-6
    y_ref = analytic_step_response(tf.num, tf.den, t)
    scale = np.max(np.abs(y_ref))
    assert np.max(np.abs(y_sim - y_ref)) / scale < 1e-6


def test_sigma1_step_undershoot():
    d = discretize_zoh(SIGMA1, 1e-6)
    y = np.array([d.step(1.0) for _ in range(5000)])
    assert y.min() < 0
    assert y[-1] == pytest.approx(10.0, rel=0.05)


def test_plant_step_rejects_nonfinite():
    d = discretize_zoh(SIGMA1, 1e-6)
    with pytest.raises(SimulationFault):
        d.step(float("nan"))
    with pytest.raises(SimulationFault):
        d.step(float("inf"))


def test_trim_threshold():
    # leading coefficients at 1e-12 of the max are symbolic zeros
    tf = TransferFunction(num=[1e-14, 1.0, 2.0], den=[1.0, 1.0, 1.0])
    assert tf.num.size == 2

"""Fixed-step closed-loop executor.

Per tick: sample the reference (with analytic derivatives), form the error
against the last measured output, let the controller compute u_k, add the
input disturbance, step the active plant, then feed the new output to the
derivative estimator.  Plant switches happen at configured ticks; by
default the incoming plant's state is chosen so its output is continuous
with the last measurement (minimum-norm solve of C x = y), since a physical
plant swap does not reset the measured signal.

Divergence (|y| beyond 1000x the reference amplitude, or any non-finite
signal) sets a flag and truncates the trace instead of raising.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .controllers import ControllerConfig, make_controller
from .errors import ScenarioError, SimulationFault
from .estimator import DerivativeEstimator
from .lti import StateSpaceModel, discretize_zoh
from .signals import DisturbanceSpec, ReferenceSpec

DIVERGENCE_FACTOR = 1e3
SETTLING_BAND = 0.02

STATE_CARRY_MODES = ("continuous", "reset")


@dataclass
class Scenario:
    label: str
    plants: list[StateSpaceModel]
    controller: ControllerConfig
    reference: ReferenceSpec
    ts: float
    duration: float
    switch_times: list[float] = field(default_factory=list)
    disturbance: DisturbanceSpec = field(default_factory=DisturbanceSpec)
    state_carry: str = "continuous"
    u_limit: float | None = None
    estimator_smoothing: float = 0.0

    @property
    def n_steps(self) -> int:
        return int(round(self.duration / self.ts))

    def validate(self) -> None:
        if not self.plants:
            raise ScenarioError("scenario needs at least one plant")
        if self.ts <= 0:
            raise ScenarioError("ts must be positive")
        if self.duration <= 0:
            raise ScenarioError("duration must be positive")
        if abs(self.n_steps * self.ts - self.duration) > self.ts:
            raise ScenarioError("ts must divide duration to within one tick")
        if len(self.switch_times) != len(self.plants) - 1:
            raise ScenarioError(
                f"{len(self.plants)} plants need {len(self.plants) - 1} switch "
                f"times, got {len(self.switch_times)}"
            )
        prev = 0.0
        for st in self.switch_times:
            if not prev < st < self.duration:
                raise ScenarioError(
                    "switch times must be strictly increasing within (0, duration)"
                )
            prev = st
        ticks = [int(round(st / self.ts)) for st in self.switch_times]
        if any(t < 1 or t >= self.n_steps for t in ticks) or \
                any(b <= a for a, b in zip(ticks, ticks[1:])):
            raise ScenarioError(
                "switch times must land on distinct sample ticks inside the run"
            )
        if self.state_carry not in STATE_CARRY_MODES:
            raise ScenarioError(f"state_carry must be one of {STATE_CARRY_MODES}")
        if self.u_limit is not None and self.u_limit <= 0:
            raise ScenarioError("u_limit must be positive when set")
        if not 0.0 <= self.estimator_smoothing < 1.0:
            raise ScenarioError("estimator_smoothing must be in [0, 1)")

    @property
    def amplitude_scale(self) -> float:
        return abs(self.reference.amplitude) or 1.0


@dataclass
class Metrics:
    iae: float
    max_abs_u: float
    max_overshoot: float
    settling_time: float | None
    post_switch_recovery: list[float | None]
    diverged: bool

    def to_dict(self) -> dict:
        return {
            "iae": self.iae,
            "max_abs_u": self.max_abs_u,
            "max_overshoot": self.max_overshoot,
            "settling_time": self.settling_time,
            "post_switch_recovery": list(self.post_switch_recovery),
            "diverged": self.diverged,
        }


@dataclass
class SimulationTrace:
    t: np.ndarray
    r: np.ndarray
    y: np.ndarray
    u: np.ndarray
    eps: np.ndarray
    plant_id: np.ndarray
    metrics: Metrics | None = None

    def __len__(self) -> int:
        return self.t.size


def _carry_state(plant, y_last: float, mode: str) -> None:
    """Initialize the incoming plant's state at a switch."""
    if mode == "reset":
        plant.reset()
        return
    c = plant.C
    cc = float(c @ c)
    if cc == 0.0:
        plant.reset()
        return
    plant.reset(c * (y_last / cc))


def run_closed_loop(scenario: Scenario) -> SimulationTrace:
    scenario.validate()
    ts = scenario.ts
    n = scenario.n_steps
    plants = [discretize_zoh(p, ts) for p in scenario.plants]
    switch_ticks = [int(round(st / ts)) for st in scenario.switch_times]
    controller = make_controller(scenario.controller, ts, scenario.u_limit)
    estimator = DerivativeEstimator(ts, order=2,
                                    smoothing=scenario.estimator_smoothing)
    y_limit = DIVERGENCE_FACTOR * scenario.amplitude_scale

    t_arr = np.empty(n)
    r_arr = np.empty(n)
    y_arr = np.empty(n)
    u_arr = np.empty(n)
    e_arr = np.empty(n)
    p_arr = np.empty(n, dtype=np.int64)

    active = 0
    plant = plants[0]
    y_prev = 0.0
    d1 = d2 = 0.0
    rows = 0
    for k in range(n):
        if active < len(switch_ticks) and k == switch_ticks[active]:
            active += 1
            plant = plants[active]
            _carry_state(plant, y_prev, scenario.state_carry)
        t = k * ts
        r, rd1, rd2 = scenario.reference.sample(t)
        try:
            u = controller.step(r - y_prev, d1, d2, rd1, rd2)
        except SimulationFault:
            break
        if not math.isfinite(u):
            break
        y = plant.step(u + scenario.disturbance.sample(t))

        t_arr[k] = t
        r_arr[k] = r
        y_arr[k] = y
        u_arr[k] = u
        e_arr[k] = r - y
        p_arr[k] = active
        rows = k + 1

        if not math.isfinite(y) or abs(y) > y_limit:
            break
        d1, d2 = estimator.push(y)
        y_prev = y

    trace = SimulationTrace(
        t=t_arr[:rows], r=r_arr[:rows], y=y_arr[:rows], u=u_arr[:rows],
        eps=e_arr[:rows], plant_id=p_arr[:rows],
    )
    trace.metrics = compute_metrics(trace, scenario)
    return trace


def compute_metrics(trace: SimulationTrace, scenario: Scenario) -> Metrics:
    if len(trace) == 0:
        raise ValueError("cannot compute metrics of an empty trace")
    amp = scenario.amplitude_scale
    finite = bool(np.all(np.isfinite(trace.y)))
    diverged = (
        len(trace) < scenario.n_steps
        or not finite
        or bool(np.any(np.abs(trace.y) > DIVERGENCE_FACTOR * amp))
    )
    iae = float(np.sum(np.abs(trace.eps)) * scenario.ts)
    max_abs_u = float(np.max(np.abs(trace.u)))
    max_overshoot = float(max(0.0, np.max(trace.y - trace.r) / amp))

    band = SETTLING_BAND * amp
    violations = np.nonzero(np.abs(trace.eps) >= band)[0]
    settle_tick = 0 if violations.size == 0 else int(violations[-1]) + 1
    settled = settle_tick < len(trace) and not diverged
    settling_time = float(trace.t[settle_tick]) if settled else None

    recovery: list[float | None] = []
    for st in scenario.switch_times:
        if settling_time is None:
            recovery.append(None)
        else:
            recovery.append(max(0.0, settling_time - st))
    return Metrics(
        iae=iae,
        max_abs_u=max_abs_u,
        max_overshoot=max_overshoot,
        settling_time=settling_time,
        post_switch_recovery=recovery,
        diverged=diverged,
    )

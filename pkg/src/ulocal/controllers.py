"""The three control laws.

* PidController: textbook discrete PID (rectangular integral, backward-
  difference derivative), tunable from a first-order-plus-delay fit.
* IpiController: incremental model-free law.  Per tick,
      u_k = u_{k-1} - (y^(n)|_{k-1} - r^(n)|_k)/alpha + Kp*e_k + Ki*Int(e),
  the finite-difference form that cancels the plant's unknown lumped
  dynamics through u_{k-1}.
* IstarPiController: derivative-feedback variant for non-minimum-phase
  plants.  A gain function multiplies the whole update,
      u_k = G * (u_{k-1} - d2*(lam*y''|_{k-1} - r''|_k)
                         - d1*(lam*y'|_{k-1}  - r'|_k)),
  with G = ki * Int(e) (or a constant, gain_mode="pure").  The
  multiplicative structure is deliberate: u stays at 0 until tracking
  error has accumulated.

All controllers consume the error e_k = r_k - y_{k-1} plus derivative
estimates of y as of tick k-1, so no law ever uses a sample newer than
the loop can causally provide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SimulationFault

GAIN_MODES = ("integral", "pure")


def broida_gains(k_static: float, t_const: float, delay: float) -> tuple[float, float, float]:
    """PID gains (Kp, Ki, Kd) from a K*exp(-tau*s)/(T*s+1) plant fit:
    Kp = 100(0.4 tau + T)/(120 K tau), Ki = 1/(1.33 K tau), Kd = 0.35 T / K.
    """
    if k_static <= 0 or t_const <= 0 or delay <= 0:
        raise ValueError("broida_gains requires K, T, tau all positive")
    kp = 100.0 * (0.4 * delay + t_const) / (120.0 * k_static * delay)
    ki = 1.0 / (1.33 * k_static * delay)
    kd = 0.35 * t_const / k_static
    return kp, ki, kd


@dataclass(frozen=True)
class PidConfig:
    kp: float
    ki: float = 0.0
    kd: float = 0.0


@dataclass(frozen=True)
class IpiConfig:
    alpha: float
    kp: float = 0.0
    ki: float = 0.0
    order: int = 1

    def __post_init__(self):
        if self.alpha == 0.0:
            raise ValueError("alpha must be nonzero")
        if self.order not in (1, 2):
            raise ValueError("derivative order must be 1 or 2")


@dataclass(frozen=True)
class IstarPiConfig:
    lam: float = 1.0
    delta1: float = 0.0
    delta2: float = 0.0
    ki: float = 1.0
    gain_mode: str = "integral"

    def __post_init__(self):
        if self.delta1 == 0.0 and self.delta2 == 0.0:
            raise ValueError("at least one of delta1, delta2 must be nonzero")
        if self.gain_mode not in GAIN_MODES:
            raise ValueError(f"gain_mode must be one of {GAIN_MODES}")


ControllerConfig = PidConfig | IpiConfig | IstarPiConfig


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise SimulationFault(f"non-finite controller input {name} = {value!r}")


def _clamp(u: float, limit: float | None) -> float:
    if limit is not None:
        if u > limit:
            return limit
        if u < -limit:
            return -limit
    return u


class PidController:
    def __init__(self, cfg: PidConfig, ts: float, u_limit: float | None = None):
        self.cfg = cfg
        self.ts = ts
        self.u_limit = u_limit
        self.integral = 0.0
        self.err_prev = 0.0

    def step(self, err: float, y_d1: float = 0.0, y_d2: float = 0.0,
             r_d1: float = 0.0, r_d2: float = 0.0) -> float:
        _check_finite("err", err)
        c = self.cfg
        u = (c.kp * err + c.ki * self.integral
             + c.kd * (err - self.err_prev) / self.ts)
        self.integral += err * self.ts
        self.err_prev = err
        return _clamp(u, self.u_limit)


class IpiController:
    def __init__(self, cfg: IpiConfig, ts: float, u_limit: float | None = None):
        self.cfg = cfg
        self.ts = ts
        self.u_limit = u_limit
        self.u_prev = 0.0
        self.integral = 0.0

    def step(self, err: float, y_d1: float = 0.0, y_d2: float = 0.0,
             r_d1: float = 0.0, r_d2: float = 0.0) -> float:
        _check_finite("err", err)
        c = self.cfg
        if c.order == 1:
            y_nd, r_nd = y_d1, r_d1
        else:
            y_nd, r_nd = y_d2, r_d2
        _check_finite("y_deriv", y_nd)
        u = (self.u_prev - (y_nd - r_nd) / c.alpha
             + c.kp * err + c.ki * self.integral)
        self.integral += err * self.ts
        u = _clamp(u, self.u_limit)
        self.u_prev = u
        return u


class IstarPiController:
    def __init__(self, cfg: IstarPiConfig, ts: float, u_limit: float | None = None):
        self.cfg = cfg
        self.ts = ts
        self.u_limit = u_limit
        self.u_prev = 0.0
        self.integral = 0.0

    def step(self, err: float, y_d1: float = 0.0, y_d2: float = 0.0,
             r_d1: float = 0.0, r_d2: float = 0.0) -> float:
        _check_finite("err", err)
        c = self.cfg
        self.integral += err * self.ts
        gain = c.ki * self.integral if c.gain_mode == "integral" else c.ki
        term2 = c.delta2 * (c.lam * y_d2 - r_d2)
        term1 = c.delta1 * (c.lam * y_d1 - r_d1)
        bracket = self.u_prev - term2 - term1
        u = gain * bracket
        if not math.isfinite(u):
            culprit = next(
                (label for label, v in (
                    ("second-derivative term", term2),
                    ("first-derivative term", term1),
                    ("bracket", bracket),
                    ("gain", gain),
                ) if not math.isfinite(v)),
                "product",
            )
            raise SimulationFault(f"non-finite control update ({culprit} blew up)")
        u = _clamp(u, self.u_limit)
        self.u_prev = u
        return u


Controller = PidController | IpiController | IstarPiController


def make_controller(cfg: ControllerConfig, ts: float,
                    u_limit: float | None = None) -> Controller:
    if isinstance(cfg, PidConfig):
        return PidController(cfg, ts, u_limit)
    if isinstance(cfg, IpiConfig):
        return IpiController(cfg, ts, u_limit)
    if isinstance(cfg, IstarPiConfig):
        return IstarPiController(cfg, ts, u_limit)
    raise TypeError(f"unknown controller config type {type(cfg).__name__}")

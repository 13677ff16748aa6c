"""Reference trajectories and input disturbances, sampled with analytic
derivatives (the control laws need the first two reference derivatives
exactly, never by numerical differentiation)."""
from __future__ import annotations

import math
from dataclasses import dataclass

REFERENCE_KINDS = ("step", "exponential", "sinusoid")
DISTURBANCE_KINDS = ("none", "sinusoid")


@dataclass(frozen=True)
class ReferenceSpec:
    """step:        r = offset + amplitude
    exponential: r = offset + amplitude * (1 - exp(-t/time_constant))
    sinusoid:    r = offset + amplitude * sin(2*pi*frequency*t + phase)
    """

    kind: str
    amplitude: float = 1.0
    time_constant: float | None = None
    frequency: float | None = None
    phase: float = 0.0
    offset: float = 0.0

    def __post_init__(self):
        if self.kind not in REFERENCE_KINDS:
            raise ValueError(f"unknown reference kind {self.kind!r}")
        if self.kind == "exponential":
            if self.time_constant is None or self.time_constant <= 0:
                raise ValueError("exponential reference needs time_constant > 0")
        if self.kind == "sinusoid":
            if self.frequency is None or self.frequency <= 0:
                raise ValueError("sinusoid reference needs frequency > 0")

    def sample(self, t: float) -> tuple[float, float, float]:
        """Return (r, dr/dt, d2r/dt2) at time t."""
        if self.kind == "step":
            return self.offset + self.amplitude, 0.0, 0.0
        if self.kind == "exponential":
            tau = self.time_constant
            e = math.exp(-t / tau)
            return (
                self.offset + self.amplitude * (1.0 - e),
                self.amplitude / tau * e,
                -self.amplitude / tau ** 2 * e,
            )
        w = 2.0 * math.pi * self.frequency
        ph = w * t + self.phase
        return (
            self.offset + self.amplitude * math.sin(ph),
            self.amplitude * w * math.cos(ph),
            -self.amplitude * w * w * math.sin(ph),
        )


@dataclass(frozen=True)
class DisturbanceSpec:
    """Additive input disturbance: none, or amplitude * cos(2*pi*t/period)."""

    kind: str = "none"
    amplitude: float = 0.0
    period: float | None = None

    def __post_init__(self):
        if self.kind not in DISTURBANCE_KINDS:
            raise ValueError(f"unknown disturbance kind {self.kind!r}")
        if self.kind == "sinusoid" and (self.period is None or self.period <= 0):
            raise ValueError("sinusoid disturbance needs period > 0")

    def sample(self, t: float) -> float:
        if self.kind == "none":
            return 0.0
        return self.amplitude * math.cos(2.0 * math.pi * t / self.period)

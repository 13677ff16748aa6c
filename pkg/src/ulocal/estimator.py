"""Causal output-derivative estimation by backward differences.

Only samples up to the current tick are used, so a controller consuming the
estimate at tick k sees derivatives of y as of tick k-1.  Until enough
samples exist, underdetermined orders report 0 (correct for runs starting
at rest).
"""
from __future__ import annotations

import math
from collections import deque

from .errors import SimulationFault


class DerivativeEstimator:
    """First and second derivative estimates with optional exponential
    smoothing est <- (1-beta)*raw + beta*est."""

    def __init__(self, ts: float, order: int = 2, window: int | None = None,
                 smoothing: float = 0.0):
        if ts <= 0:
            raise ValueError("ts must be positive")
        if order not in (1, 2):
            raise ValueError("order must be 1 or 2")
        if window is None:
            window = order + 1
        if window < order + 1:
            raise ValueError(f"window must be >= order + 1 = {order + 1}")
        if not 0.0 <= smoothing < 1.0:
            raise ValueError("smoothing must be in [0, 1)")
        self.ts = ts
        self.order = order
        self.smoothing = smoothing
        self._hist: deque[float] = deque(maxlen=window)
        self._d1 = 0.0
        self._d2 = 0.0

    def push(self, y: float) -> tuple[float, float]:
        """Ingest one output sample, return smoothed (dy/dt, d2y/dt2)."""
        if not math.isfinite(y):
            raise SimulationFault(f"non-finite output sample y = {y!r}")
        h = self._hist
        h.append(y)
        raw1 = (h[-1] - h[-2]) / self.ts if len(h) >= 2 else 0.0
        raw2 = 0.0
        if self.order >= 2 and len(h) >= 3:
            raw2 = (h[-1] - 2.0 * h[-2] + h[-3]) / self.ts ** 2
        b = self.smoothing
        self._d1 = (1.0 - b) * raw1 + b * self._d1
        self._d2 = (1.0 - b) * raw2 + b * self._d2
        return self._d1, self._d2

    def reset(self) -> None:
        self._hist.clear()
        self._d1 = 0.0
        self._d2 = 0.0

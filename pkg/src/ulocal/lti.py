"""Continuous-time SISO LTI plants: analysis, transfer-function conversion,
exact zero-order-hold sampling, and single-sample stepping.

Conventions used throughout:
  * transfer-function coefficient lists are in descending powers of s,
    trimmed of leading near-zeros;
  * a sampled plant emits y_k = C x_k + D u_k *before* advancing its state,
    so y_k never depends on decisions taken later in the same tick.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
import scipy.signal

from .errors import SimulationFault

# leading coefficients below this fraction of the largest magnitude are
# treated as symbolic zeros lost to floating point
TRIM_RTOL = 1e-12


def _trim_leading(coeffs) -> np.ndarray:
    c = np.atleast_1d(np.asarray(coeffs, dtype=float)).ravel()
    scale = float(np.max(np.abs(c))) if c.size else 0.0
    if scale == 0.0:
        return np.zeros(1)
    i = 0
    while i < c.size - 1 and abs(c[i]) <= TRIM_RTOL * scale:
        i += 1
    return c[i:].copy()


def _poly_roots(coeffs) -> np.ndarray:
    """Roots of a real polynomial: closed form up to degree 2, companion
    matrix above."""
    c = _trim_leading(coeffs)
    deg = c.size - 1
    if deg <= 0:
        return np.zeros(0, dtype=complex)
    if deg == 1:
        return np.array([-c[1] / c[0]], dtype=complex)
    if deg == 2:
        a, b, cc = c
        disc = cmath.sqrt(complex(b * b - 4.0 * a * cc))
        return np.array([(-b + disc) / (2 * a), (-b - disc) / (2 * a)])
    return np.roots(c)


@dataclass
class TransferFunction:
    """Proper SISO rational function num(s)/den(s)."""

    num: np.ndarray
    den: np.ndarray

    def __post_init__(self):
        self.num = _trim_leading(self.num)
        self.den = _trim_leading(self.den)
        if not np.all(np.isfinite(self.num)) or not np.all(np.isfinite(self.den)):
            raise ValueError("transfer function coefficients must be finite")
        if np.all(self.den == 0.0):
            raise ValueError("denominator must have a nonzero leading coefficient")
        if self.num.size > self.den.size:
            raise ValueError("improper transfer function: deg(num) > deg(den)")

    @property
    def order(self) -> int:
        return self.den.size - 1

    def __call__(self, s: complex) -> complex:
        return complex(np.polyval(self.num, s)) / complex(np.polyval(self.den, s))


@dataclass
class StateSpaceModel:
    """Continuous-time SISO plant dx/dt = A x + B u, y = C x + D u."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: float = 0.0
    name: str = ""

    def __post_init__(self):
        self.A = np.asarray(self.A, dtype=float)
        if self.A.ndim != 2 or self.A.shape[0] != self.A.shape[1]:
            raise ValueError(f"A must be square, got shape {self.A.shape}")
        n = self.A.shape[0]
        B = np.asarray(self.B, dtype=float)
        if B.ndim == 2 and B.shape[1] != 1:
            raise ValueError("SISO only: B must be a single column")
        C = np.asarray(self.C, dtype=float)
        if C.ndim == 2 and C.shape[0] != 1:
            raise ValueError("SISO only: C must be a single row")
        self.B = B.reshape(-1)
        self.C = C.reshape(-1)
        if self.B.size != n or self.C.size != n:
            raise ValueError(
                f"B and C must have {n} entries, got {self.B.size} and {self.C.size}"
            )
        self.D = float(self.D)

    @property
    def order(self) -> int:
        return self.A.shape[0]


def ss_to_tf(m: StateSpaceModel) -> TransferFunction:
    """C (sI - A)^-1 B + D as a reduced coefficient ratio; the denominator is
    the (monic) characteristic polynomial of A."""
    num, den = scipy.signal.ss2tf(
        m.A, m.B.reshape(-1, 1), m.C.reshape(1, -1), np.array([[m.D]])
    )
    return TransferFunction(num[0], den)


def tf_to_ss(tf: TransferFunction, name: str = "") -> StateSpaceModel:
    """Controllable-canonical realization of a proper transfer function."""
    A, B, C, D = scipy.signal.tf2ss(tf.num, tf.den)
    return StateSpaceModel(A, B, C, float(np.asarray(D).reshape(-1)[0]), name=name)


def poles(m: StateSpaceModel) -> np.ndarray:
    return np.linalg.eigvals(m.A)


def zeros(m: StateSpaceModel) -> np.ndarray:
    return _poly_roots(ss_to_tf(m).num)


def dc_gain(m: StateSpaceModel) -> float:
    try:
        sol = np.linalg.solve(m.A, m.B)
    except np.linalg.LinAlgError:
        raise ValueError(
            f"plant {m.name or '<unnamed>'} has a pole at s = 0; DC gain undefined"
        ) from None
    return float(-m.C @ sol + m.D)


def is_minimum_phase(m: StateSpaceModel) -> bool:
    """True iff every transmission zero lies strictly in the left half plane."""
    return bool(np.all(zeros(m).real < 0.0))


@dataclass
class DiscretePlant:
    """ZOH-sampled plant stepped one tick at a time."""

    Ad: np.ndarray
    Bd: np.ndarray
    C: np.ndarray
    D: float
    Ts: float
    x: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.Ts <= 0:
            raise ValueError("Ts must be positive")
        if self.x is None:
            self.x = np.zeros(self.Ad.shape[0])
        else:
            self.x = np.asarray(self.x, dtype=float).reshape(-1)

    @property
    def order(self) -> int:
        return self.Ad.shape[0]

    def reset(self, x0=None) -> None:
        if x0 is None:
            self.x = np.zeros(self.order)
        else:
            self.x = np.asarray(x0, dtype=float).reshape(-1).copy()

    def step(self, u: float) -> float:
        """Emit y_k = C x_k + D u_k, then advance x to the next sample."""
        if not math.isfinite(u):
            raise SimulationFault(f"non-finite plant input u = {u!r}")
        y = float(self.C @ self.x + self.D * u)
        self.x = self.Ad @ self.x + self.Bd * u
        return y


def discretize_zoh(m: StateSpaceModel, ts: float) -> DiscretePlant:
    """Exact ZOH discretization via one matrix exponential of the augmented
    block [[A, B], [0, 0]] * Ts."""
    if ts <= 0:
        raise ValueError("sample period must be positive")
    n = m.order
    block = np.zeros((n + 1, n + 1))
    block[:n, :n] = m.A
    block[:n, n] = m.B
    md = scipy.linalg.expm(block * ts)
    return DiscretePlant(
        Ad=md[:n, :n].copy(),
        Bd=md[:n, n].copy(),
        C=m.C.copy(),
        D=m.D,
        Ts=ts,
    )

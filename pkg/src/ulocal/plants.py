"""Built-in plant library.

sigma1/sigma2 are non-minimum phase, sigma3/sigma4 minimum phase; all four
are the switched-system test set.  triple_lag is the classic stable
benchmark (s+2)^2/(s+1)^3 used for PID-vs-model-free comparisons, and
triple_lag_aged is the same plant after its pole drifts from 1 to 1.5.
"""
from __future__ import annotations

from .lti import StateSpaceModel, TransferFunction, tf_to_ss

SIGMA1 = StateSpaceModel(
    A=[[0.0, -1000.0], [100000.0, -5000.0]],
    B=[20000.0, 0.0],
    C=[-10.0, 1.0],
    name="sigma1",
)

SIGMA2 = StateSpaceModel(
    A=[[0.0, -900.0], [80000.0, -3500.0]],
    B=[20000.0, 0.0],
    C=[-13.0, 1.0],
    name="sigma2",
)

SIGMA3 = StateSpaceModel(
    A=[[0.0, -900.0], [80000.0, -3500.0]],
    B=[20000.0, 0.0],
    C=[13.0, 1.0],
    name="sigma3",
)

SIGMA4 = StateSpaceModel(
    A=[[0.0, -400.0], [70000.0, -1500.0]],
    B=[20000.0, 0.0],
    C=[5.0, 1.0],
    name="sigma4",
)

# (s+2)^2 / (s+1)^3
TRIPLE_LAG = tf_to_ss(
    TransferFunction(num=[1.0, 4.0, 4.0], den=[1.0, 3.0, 3.0, 1.0]),
    name="triple_lag",
)

# same numerator, triple pole shifted to 1.5: (s+2)^2 / (s+1.5)^3
TRIPLE_LAG_AGED = tf_to_ss(
    TransferFunction(num=[1.0, 4.0, 4.0], den=[1.0, 4.5, 6.75, 3.375]),
    name="triple_lag_aged",
)

# first-order-plus-delay fit of triple_lag, identified graphically
BROIDA_FIT = {"K": 4.0, "T": 2.018, "tau": 0.2424}

PLANT_LIBRARY: dict[str, StateSpaceModel] = {
    p.name: p
    for p in (SIGMA1, SIGMA2, SIGMA3, SIGMA4, TRIPLE_LAG, TRIPLE_LAG_AGED)
}


def get_plant(name: str) -> StateSpaceModel:
    try:
        return PLANT_LIBRARY[name]
    except KeyError:
        known = ", ".join(sorted(PLANT_LIBRARY))
        raise KeyError(f"unknown plant {name!r}; built-in plants: {known}") from None

"""Closed-loop simulation toolkit for model-free control of
non-minimum-phase and switched linear plants."""

from .controllers import (
    IpiConfig,
    IpiController,
    IstarPiConfig,
    IstarPiController,
    PidConfig,
    PidController,
    broida_gains,
    make_controller,
)
from .engine import Metrics, Scenario, SimulationTrace, compute_metrics, run_closed_loop
from .errors import ScenarioError, SimulationFault
from .estimator import DerivativeEstimator
from .lti import (
    DiscretePlant,
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
from .plants import PLANT_LIBRARY, get_plant
from .scenario_io import (
    SCENARIO_SCHEMA,
    load_scenario,
    read_trace_csv,
    scenario_from_dict,
    write_metrics_json,
    write_trace_csv,
)
from .signals import DisturbanceSpec, ReferenceSpec

__version__ = "0.1.0"

__all__ = [
    "DerivativeEstimator",
    "DiscretePlant",
    "DisturbanceSpec",
    "IpiConfig",
    "IpiController",
    "IstarPiConfig",
    "IstarPiController",
    "Metrics",
    "PLANT_LIBRARY",
    "PidConfig",
    "PidController",
    "ReferenceSpec",
    "SCENARIO_SCHEMA",
    "Scenario",
    "ScenarioError",
    "SimulationFault",
    "SimulationTrace",
    "StateSpaceModel",
    "TransferFunction",
    "broida_gains",
    "compute_metrics",
    "dc_gain",
    "discretize_zoh",
    "get_plant",
    "is_minimum_phase",
    "load_scenario",
    "make_controller",
    "poles",
    "read_trace_csv",
    "run_closed_loop",
    "scenario_from_dict",
    "ss_to_tf",
    "tf_to_ss",
    "write_metrics_json",
    "write_trace_csv",
    "zeros",
]

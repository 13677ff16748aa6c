"""Scenario documents (JSON), trace CSVs, and metrics reports.

A scenario file mirrors the Scenario dataclass; plants are either names
from the built-in library or inline state-space objects.  Documents are
schema-validated before anything executes and unknown fields are rejected.

CSV traces use the exact header ``t,r,y,u,eps,plant_id``, decimal floats
with 17 significant digits, and bare newlines, so parsing a file back
reproduces the in-memory trace bit for bit.
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import jsonschema
import numpy as np

from .controllers import ControllerConfig, IpiConfig, IstarPiConfig, PidConfig
from .engine import Metrics, Scenario, SimulationTrace
from .errors import ScenarioError
from .lti import StateSpaceModel
from .plants import PLANT_LIBRARY
from .signals import DisturbanceSpec, ReferenceSpec

_NUMBER = {"type": "number"}
_POSITIVE = {"type": "number", "exclusiveMinimum": 0}

_PLANT_OBJECT = {
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "A", "B", "C"],
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "A": {"type": "array", "items": {"type": "array", "items": _NUMBER}},
        "B": {"type": "array"},
        "C": {"type": "array"},
        "D": _NUMBER,
    },
}

_CONTROLLER = {
    "oneOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["type", "kp"],
            "properties": {
                "type": {"const": "pid"},
                "kp": _NUMBER,
                "ki": _NUMBER,
                "kd": _NUMBER,
            },
        },
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["type", "alpha"],
            "properties": {
                "type": {"const": "ipi"},
                "alpha": _NUMBER,
                "kp": _NUMBER,
                "ki": _NUMBER,
                "order": {"enum": [1, 2]},
            },
        },
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["type"],
            "properties": {
                "type": {"const": "istar_pi"},
                "lam": _NUMBER,
                "delta1": _NUMBER,
                "delta2": _NUMBER,
                "ki": _NUMBER,
                "gain_mode": {"enum": ["integral", "pure"]},
            },
        },
    ]
}

_REFERENCE = {
    "type": "object",
    "additionalProperties": False,
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["step", "exponential", "sinusoid"]},
        "amplitude": _NUMBER,
        "time_constant": _POSITIVE,
        "frequency": _POSITIVE,
        "phase": _NUMBER,
        "offset": _NUMBER,
    },
}

_DISTURBANCE = {
    "type": "object",
    "additionalProperties": False,
    "required": ["kind"],
    "properties": {
        "kind": {"enum": ["none", "sinusoid"]},
        "amplitude": _NUMBER,
        "period": _POSITIVE,
    },
}

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "required": ["label", "plants", "controller", "reference", "ts", "duration"],
    "properties": {
        "label": {"type": "string", "minLength": 1},
        "plants": {
            "type": "array",
            "minItems": 1,
            "items": {"oneOf": [{"type": "string", "minLength": 1}, _PLANT_OBJECT]},
        },
        "switch_times": {"type": "array", "items": _POSITIVE},
        "controller": _CONTROLLER,
        "reference": _REFERENCE,
        "disturbance": _DISTURBANCE,
        "ts": _POSITIVE,
        "duration": _POSITIVE,
        "state_carry": {"enum": ["continuous", "reset"]},
        "u_limit": _POSITIVE,
        "estimator_smoothing": {"type": "number", "minimum": 0, "exclusiveMaximum": 1},
    },
}


def plant_from_doc(doc) -> StateSpaceModel:
    if isinstance(doc, str):
        if doc not in PLANT_LIBRARY:
            known = ", ".join(sorted(PLANT_LIBRARY))
            raise ScenarioError(f"unknown plant {doc!r}; built-in plants: {known}")
        return PLANT_LIBRARY[doc]
    try:
        return StateSpaceModel(
            A=doc["A"], B=doc["B"], C=doc["C"], D=doc.get("D", 0.0),
            name=doc["name"],
        )
    except ValueError as exc:
        raise ScenarioError(f"invalid plant {doc.get('name', '?')!r}: {exc}") from exc


def controller_from_doc(doc: dict) -> ControllerConfig:
    kind = doc["type"]
    try:
        if kind == "pid":
            return PidConfig(kp=doc["kp"], ki=doc.get("ki", 0.0), kd=doc.get("kd", 0.0))
        if kind == "ipi":
            return IpiConfig(alpha=doc["alpha"], kp=doc.get("kp", 0.0),
                             ki=doc.get("ki", 0.0), order=doc.get("order", 1))
        return IstarPiConfig(
            lam=doc.get("lam", 1.0), delta1=doc.get("delta1", 0.0),
            delta2=doc.get("delta2", 0.0), ki=doc.get("ki", 1.0),
            gain_mode=doc.get("gain_mode", "integral"),
        )
    except ValueError as exc:
        raise ScenarioError(f"invalid {kind} controller: {exc}") from exc


def scenario_from_dict(doc: dict) -> Scenario:
    try:
        jsonschema.validate(doc, SCENARIO_SCHEMA)
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ScenarioError(f"scenario schema violation at {path}: {exc.message}") from exc
    try:
        reference = ReferenceSpec(**doc["reference"])
        disturbance = DisturbanceSpec(**doc.get("disturbance", {"kind": "none"}))
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc
    scenario = Scenario(
        label=doc["label"],
        plants=[plant_from_doc(p) for p in doc["plants"]],
        controller=controller_from_doc(doc["controller"]),
        reference=reference,
        disturbance=disturbance,
        ts=doc["ts"],
        duration=doc["duration"],
        switch_times=list(doc.get("switch_times", [])),
        state_carry=doc.get("state_carry", "continuous"),
        u_limit=doc.get("u_limit"),
        estimator_smoothing=doc.get("estimator_smoothing", 0.0),
    )
    scenario.validate()
    return scenario


def load_scenario(path: str | Path) -> Scenario:
    raw = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ScenarioError(f"{path}: scenario document must be a JSON object")
    return scenario_from_dict(doc)


CSV_HEADER = "t,r,y,u,eps,plant_id"


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_trace_csv(trace: SimulationTrace, path: str | Path) -> None:
    lines = [CSV_HEADER]
    for i in range(len(trace)):
        lines.append(
            f"{_fmt(trace.t[i])},{_fmt(trace.r[i])},{_fmt(trace.y[i])},"
            f"{_fmt(trace.u[i])},{_fmt(trace.eps[i])},{int(trace.plant_id[i])}"
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_trace_csv(path: str | Path) -> SimulationTrace:
    with open(path, encoding="utf-8", newline="\n") as fh:
        header = fh.readline().strip()
        if header != CSV_HEADER:
            raise ValueError(f"{path}: unexpected CSV header {header!r}")
        cols: list[list[float]] = [[], [], [], [], [], []]
        for line in fh:
            parts = line.rstrip("\n").split(",")
            if len(parts) != 6:
                raise ValueError(f"{path}: malformed CSV row {line!r}")
            for col, part in zip(cols, parts):
                col.append(float(part))
    return SimulationTrace(
        t=np.array(cols[0]),
        r=np.array(cols[1]),
        y=np.array(cols[2]),
        u=np.array(cols[3]),
        eps=np.array(cols[4]),
        plant_id=np.array(cols[5], dtype=np.int64),
    )


def metrics_document(scenario: Scenario, metrics: Metrics) -> dict:
    doc = {"label": scenario.label}
    doc.update(metrics.to_dict())
    return doc


def write_metrics_json(scenario: Scenario, metrics: Metrics, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(metrics_document(scenario, metrics), fh, indent=2)
        fh.write("\n")

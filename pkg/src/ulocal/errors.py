"""Exception types shared across the simulation stack."""


class SimulationFault(RuntimeError):
    """A closed-loop signal became non-finite mid-run."""


class ScenarioError(ValueError):
    """A scenario document or configuration failed validation."""

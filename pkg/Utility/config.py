import os
from dataclasses import dataclass
from dataclasses import fields
from dataclasses import replace
from fractions import Fraction

import yaml

TOLERANCE_VARIABLE = "STRATEGICAL_TOLERANCE"
THRESHOLD_TOLERANCE_VARIABLE = "STRATEGICAL_THRESHOLD_TOLERANCE"


@dataclass(frozen=True)
class AnalysisConfig:
    payoff_tolerance: float = 1e-9
    threshold_tolerance: float = 1e-6
    search_bound: int = 8
    grid_step: Fraction = Fraction(1, 64)
    enumeration_limit: int = 200000
    value_iteration_max_steps: int = 100000
    n_jobs: int = 1
    default_workspace: str = "Fixtures/PrisonersDilemma"

    def __post_init__(self):
        if self.payoff_tolerance <= 0 or self.threshold_tolerance <= 0:
            raise ValueError("Tolerances must be positive")
        if self.search_bound < 1:
            raise ValueError("search_bound must be at least 1, got {}".format(self.search_bound))
        if not 0 < self.grid_step < 1:
            raise ValueError("grid_step must lie strictly between 0 and 1, got {}".format(self.grid_step))
        if self.enumeration_limit < 1 or self.value_iteration_max_steps < 1:
            raise ValueError("Limits must be positive")

    def updated(self, **overrides):
        """
        Copy with the given fields replaced; None values are ignored so
        that unset command line flags keep the configured value.
        """
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})


def _convert(name, value):
    kinds = {field.name: field.type for field in fields(AnalysisConfig)}
    kind = kinds[name]
    try:
        if kind in (float, "float"):
            return float(value)
        if kind in (int, "int"):
            return int(value)
        if kind in (Fraction, "Fraction"):
            return Fraction(str(value))
        return str(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError("Invalid value {!r} for configuration key {!r}".format(value, name))


def load_config(path=None, environment=None) -> AnalysisConfig:
    """
    Defaults, overlaid by an optional YAML file, overlaid by the
    tolerance environment variables.
    """
    environment = os.environ if environment is None else environment
    values = dict()
    if path is not None:
        with open(path, "r", encoding="utf8") as file:
            loaded = yaml.safe_load(file) or dict()
        if not isinstance(loaded, dict):
            raise ValueError("Configuration file {} must hold a mapping".format(path))
        known = {field.name for field in fields(AnalysisConfig)}
        unknown = set(loaded) - known
        if unknown:
            raise ValueError("Unknown configuration keys in {}: {}".format(path, ", ".join(sorted(unknown))))
        values.update({key: _convert(key, value) for key, value in loaded.items()})
    if environment.get(TOLERANCE_VARIABLE):
        values["payoff_tolerance"] = _convert("payoff_tolerance", environment[TOLERANCE_VARIABLE])
    if environment.get(THRESHOLD_TOLERANCE_VARIABLE):
        values["threshold_tolerance"] = _convert("threshold_tolerance", environment[THRESHOLD_TOLERANCE_VARIABLE])
    return AnalysisConfig(**values)

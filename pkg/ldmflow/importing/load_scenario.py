import os
from typing import Optional
import yaml
from ..PenaltyParams import PenaltyParams
from ..Scenario import Scenario
from ..TimeHorizon import TimeHorizon
from .load_default_settings import load_default_settings
from .load_flows_from_json import load_flows_from_json
from .load_network_from_json import load_network_from_json


SECTIONS = ("departure_grid", "solver", "continuity")


def load_scenario(filename: str, output_dir: Optional[str] = None, seed: Optional[int] = None) -> Scenario:
    """Load a scenario file (YAML or JSON).

    File names inside the scenario are relative to the scenario file. The sections "departure_grid",
    "solver" and "continuity" override the packaged defaults key by key.

    Args:
    ----
    filename:
        Scenario file.
    output_dir:
        Overrides the scenario's "output_dir".
    seed:
        Overrides the scenario's "seed".
    """
    with open(filename, 'r') as f:
        raw = yaml.safe_load(f)
    assert isinstance(raw, dict), "Scenario file '{}': expected a mapping of fields.".format(filename)

    root = os.path.dirname(os.path.abspath(filename))
    defaults = load_default_settings()
    settings = {}
    for section in SECTIONS:
        overrides = raw.get(section) or {}
        assert isinstance(overrides, dict), \
            "Scenario file '{}': field '{}' should be a mapping.".format(filename, section)
        settings[section] = dict(defaults[section], **overrides)

    assert "network" in raw, "Scenario file '{}': missing field 'network'.".format(filename)
    network = load_network_from_json(os.path.join(root, raw["network"]))
    flows = load_flows_from_json(os.path.join(root, raw["flows"])) if raw.get("flows") else None

    assert isinstance(raw.get("horizon"), dict), "Scenario file '{}': missing field 'horizon'.".format(filename)
    horizon_section = raw["horizon"]
    slack = horizon_section.get("slack")
    horizon = TimeHorizon(_number(horizon_section, "t0", filename, "horizon"),
                          _number(horizon_section, "tf", filename, "horizon"),
                          None if slack is None else _number(horizon_section, "slack", filename, "horizon"))

    penalty_section = dict({"target": (horizon.t0 + horizon.tf) / 2, "early_coeff": 0.0, "late_coeff": 0.0},
                           **(raw.get("penalty") or {}))
    penalty = PenaltyParams(_number(penalty_section, "target", filename, "penalty"),
                            _number(penalty_section, "early_coeff", filename, "penalty"),
                            _number(penalty_section, "late_coeff", filename, "penalty"))

    if output_dir is None:
        output_dir = os.path.join(root, raw.get("output_dir", "output"))
    if seed is None:
        seed = raw.get("seed", defaults["seed"])
    assert isinstance(seed, int) and not isinstance(seed, bool) and seed >= 0, \
        "Scenario file '{}': field 'seed' should be a nonnegative integer.".format(filename)

    return Scenario(filename, network, horizon, penalty, settings, output_dir, seed, flows=flows)


def _number(section, key, filename, section_name):
    assert key in section, "Scenario file '{}': missing field '{}.{}'.".format(filename, section_name, key)
    value = section[key]
    assert isinstance(value, (int, float)) and not isinstance(value, bool), \
        "Scenario file '{}': field '{}.{}' should be a number.".format(filename, section_name, key)
    return float(value)

from .load_default_settings import load_default_settings
from .load_flows_from_json import load_flows_from_json
from .load_network_from_json import load_network_from_json
from .load_scenario import load_scenario


__all__ = [
    "load_default_settings",
    "load_flows_from_json",
    "load_network_from_json",
    "load_scenario",
]

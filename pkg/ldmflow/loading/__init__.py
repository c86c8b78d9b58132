from .ArcLoader import ArcLoader
from .invert_exit_time import invert_exit_time
from .load_arc import load_arc
from .load_arc_fixed_step import load_arc_fixed_step
from .load_network import load_network
from .path_delay import path_delay
from .path_exit_time import path_exit_time
from .slack_schedule import slack_schedule
from .split_commodities import split_commodities


__all__ = [
    "ArcLoader",
    "invert_exit_time",
    "load_arc",
    "load_arc_fixed_step",
    "load_network",
    "path_delay",
    "path_exit_time",
    "slack_schedule",
    "split_commodities",
]

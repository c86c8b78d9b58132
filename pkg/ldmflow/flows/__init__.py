from .cumulate import cumulate
from .eval_curve import eval_curve
from .l2_distance import l2_distance
from .sup_distance import sup_distance
from .uniform_flows import uniform_flows


__all__ = [
    "cumulate",
    "eval_curve",
    "l2_distance",
    "sup_distance",
    "uniform_flows",
]

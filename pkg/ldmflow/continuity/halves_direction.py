from typing import Dict
import numpy
from ..PathFlowVector import PathFlowVector
from ..TimeHorizon import TimeHorizon


def halves_direction(horizon: TimeHorizon, signs: Dict[str, float]) -> PathFlowVector:
    """Perturbation that is ``sign`` on the first half of the horizon and ``-sign`` on the second,
    per path, scaled to unit L2 norm. Opposite signs on paths of one OD pair keep its volume."""
    middle = (horizon.t0 + horizon.tf) / 2
    grid = [horizon.t0, middle, horizon.tf]
    norm = numpy.sqrt(sum(sign ** 2 for sign in signs.values()) * horizon.duration)
    rates = {path_id: numpy.array([sign, -sign]) / (norm if norm > 0 else 1.0) for path_id, sign in signs.items()}
    return PathFlowVector.from_slot_rates(grid, rates)

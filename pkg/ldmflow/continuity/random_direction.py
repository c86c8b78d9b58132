import numpy
from ..Network import Network
from ..PathFlowVector import PathFlowVector
from ..TimeHorizon import TimeHorizon


def random_direction(network: Network, horizon: TimeHorizon, n_slots: int, seed: int) -> PathFlowVector:
    """Random piecewise-constant perturbation with zero volume per OD pair and unit L2 norm.

    Slot values are drawn from a standard normal distribution with ``numpy.random.RandomState``, seeded
    with seed modulo 2^32. OD pairs and paths are drawn in network order.
    """
    assert n_slots >= 1, "Expected at least one departure slot."
    random_state = numpy.random.RandomState(seed % 2 ** 32)
    grid = numpy.linspace(horizon.t0, horizon.tf, n_slots + 1)
    width = horizon.duration / n_slots
    rates = {}
    for path_ids in network.paths_by_od().values():
        draws = random_state.standard_normal((len(path_ids), n_slots))
        draws -= draws.mean()
        for path_id, values in zip(path_ids, draws):
            rates[path_id] = values
    norm = numpy.sqrt(sum(float(numpy.sum(values ** 2)) for values in rates.values()) * width)
    if norm > 0:
        rates = {path_id: values / norm for path_id, values in rates.items()}
    return PathFlowVector.from_slot_rates(grid, rates)

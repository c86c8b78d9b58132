import numpy
from ..Network import Network
from ..PathFlowVector import PathFlowVector
from ..TimeHorizon import TimeHorizon


def uniform_flows(network: Network, horizon: TimeHorizon, n_slots: int) -> PathFlowVector:
    """Every OD demand spread evenly over all its paths and over n_slots equal slots of the horizon.

    Paths whose OD pair has no demand get zero flow.
    """
    assert n_slots >= 1, "Expected at least one departure slot."
    grid = numpy.linspace(horizon.t0, horizon.tf, n_slots + 1)
    rates = {}
    for od, path_ids in network.paths_by_od().items():
        demand = network.trips[od] if od in network.trips else 0.0
        rate = demand / (len(path_ids) * horizon.duration)
        for path_id in path_ids:
            rates[path_id] = numpy.full(n_slots, rate)
    return PathFlowVector.from_slot_rates(grid, rates)

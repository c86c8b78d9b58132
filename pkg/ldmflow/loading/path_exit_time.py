import numpy
from ..LoadingResult import LoadingResult
from ..Network import Network
from ..typing import TimesType


def path_exit_time(result: LoadingResult, network: Network, path_id: str, t: TimesType) -> TimesType:
    """Arrival time at the end of a path for departures at t, composing the exit time functions
    of its arcs. Raises :class:`ldmflow.exceptions.HorizonExhaustedError` when an arc's exit time
    function is not known far enough."""
    horizon = result.horizon
    assert numpy.all((horizon.t0 <= numpy.asarray(t)) & (numpy.asarray(t) <= horizon.tf)), \
        "Departure time outside the planning horizon."
    exit_time = t
    for arc_id in network.path(path_id).arcs:
        exit_time = result[arc_id].tau(exit_time)
    return exit_time

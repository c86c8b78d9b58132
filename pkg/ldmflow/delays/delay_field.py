import numpy
from ..DelayField import DelayField
from ..LoadingResult import LoadingResult
from ..loading import path_delay
from ..Network import Network
from ..PenaltyParams import PenaltyParams
from ..utils import midpoints
from ..utils import trapezoid_weights


def delay_field(result: LoadingResult, network: Network, params: PenaltyParams, grid, weights=None) -> DelayField:
    """Delays and effective delays of every path on a departure grid.

    The minimum effective delay of an OD pair is taken over the grid points and the pair's paths.
    It is also evaluated on the grid midpoints, and the drop it shows there is kept as the
    refinement delta of the pair.

    Args:
    ----
    result:
        Loading of the flows the delays belong to.
    network:
        The loaded network.
    params:
        Schedule-deviation penalty.
    grid:
        Departure times within the planning horizon, increasing.
    weights:
        Quadrature weights of the grid points. Defaults to trapezoid weights.
    """
    grid = numpy.asarray(grid, dtype="float")
    assert grid.size > 0, "Expected a nonempty departure grid."
    assert grid[0] >= result.horizon.t0 and grid[-1] <= result.horizon.tf, \
        "Departure grid should lie within the planning horizon."

    delays = {}
    effective = {}
    refined = {}
    half_points = midpoints(grid)
    for path_id in network.path_ids:
        delays[path_id] = numpy.asarray(path_delay(result, network, path_id, grid), dtype="float").reshape(-1)
        effective[path_id] = delays[path_id] + params(grid + delays[path_id] - params.target)
        if half_points.size:
            half_delays = path_delay(result, network, path_id, half_points)
            refined[path_id] = float(numpy.min(half_delays + params(half_points + half_delays - params.target)))

    od_minimum = {}
    refinement_delta = {}
    for od, path_ids in network.paths_by_od().items():
        od_minimum[od] = float(min(numpy.min(effective[path_id]) for path_id in path_ids))
        refined_minimum = min((refined[path_id] for path_id in path_ids if path_id in refined),
                              default=od_minimum[od])
        refinement_delta[od] = max(0.0, od_minimum[od] - refined_minimum)

    if weights is None:
        weights = trapezoid_weights(grid) if grid.size > 1 else numpy.ones_like(grid)
    return DelayField(grid, delays, effective, od_minimum, network.path_od(), weights=weights,
                      refinement_delta=refinement_delta)

import numpy
from ..PathFlowVector import PathFlowVector
from ..utils import merge_grids


def l2_distance(h: PathFlowVector, g: PathFlowVector) -> float:
    """L2 distance between two path flow vectors, computed exactly on merged breakpoints.

    .. code-block:: none

        ( sum_p integral (h_p(t) - g_p(t))^2 dt )^(1/2)

    """
    assert set(h.path_ids) == set(g.path_ids), "Path flow vectors should cover the same paths."
    total = 0.0
    for path_id in h.path_ids:
        grid = merge_grids(h[path_id].breakpoints, g[path_id].breakpoints)
        difference = h[path_id].rates_on(grid) - g[path_id].rates_on(grid)
        total += float(numpy.sum(difference ** 2 * numpy.diff(grid)))
    return float(numpy.sqrt(total))

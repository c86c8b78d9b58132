from typing import Dict
import numpy


class DelayField:
    """Path delays D_p and effective delays Psi_p on a departure grid, with the smallest effective
    delay v of every OD pair.

    Args:
    ----
    grid:
        Departure times.
    delays:
        Path id to D_p on the grid.
    effective:
        Path id to Psi_p on the grid.
    od_minimum:
        OD pair to the minimum of Psi_p over the grid and the paths of the pair.
    path_od:
        Path id to its OD pair.
    weights:
        Quadrature weight of every grid point, used to integrate against path flows.
    refinement_delta:
        OD pair to the decrease of its minimum when the grid is refined by its midpoints.
    """
    def __init__(self, grid, delays: Dict[str, numpy.ndarray], effective: Dict[str, numpy.ndarray],
                 od_minimum: Dict[tuple, float], path_od: Dict[str, tuple], weights=None,
                 refinement_delta: Dict[tuple, float] = None):
        # pylint: disable=too-many-arguments
        self.grid = numpy.asarray(grid, dtype="float")
        self.delays = delays
        self.effective = effective
        self.od_minimum = od_minimum
        self.path_od = path_od
        self.weights = numpy.ones_like(self.grid) if weights is None else numpy.asarray(weights, dtype="float")
        self.refinement_delta = dict(refinement_delta or {})
        assert self.weights.shape == self.grid.shape, "Expected one weight per grid point."

    @property
    def path_ids(self):
        return list(self.effective)

    def residuals(self, path_id: str) -> numpy.ndarray:
        """Psi_p - v on the grid; nonnegative by construction."""
        return self.effective[path_id] - self.od_minimum[self.path_od[path_id]]

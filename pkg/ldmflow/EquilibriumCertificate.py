from typing import Dict
from typing import List
import numpy


class EquilibriumCertificate:
    """Evidence on how close returned path flows are to an equilibrium.

    Args:
    ----
    gap:
        Gap of the returned flows.
    od_minimum:
        OD pair to its smallest effective delay v.
    departure_times:
        Departure times the residuals are given at.
    residuals:
        Path id to Psi_p - v at the departure times.
    support:
        Path id to a boolean mask of the departure times with positive flow.
    trace:
        One record per iteration with keys iteration, gap, max_support_residual and step_length.
    converged:
        True when the gap dropped to the solver tolerance.
    """
    def __init__(self, gap: float, od_minimum: Dict[tuple, float], departure_times, residuals: Dict[str, numpy.ndarray],
                 support: Dict[str, numpy.ndarray], trace: List[dict], converged: bool):
        # pylint: disable=too-many-arguments
        assert gap >= 0, "Expected the gap to be nonnegative."
        self.gap = float(gap)
        self.od_minimum = dict(od_minimum)
        self.departure_times = numpy.asarray(departure_times, dtype="float")
        self.residuals = residuals
        self.support = support
        self.trace = list(trace)
        self.converged = bool(converged)

    @property
    def iterations(self) -> int:
        return len(self.trace)

    @property
    def max_support_residual(self) -> float:
        """Largest Psi_p - v over departure times that carry flow."""
        on_support = [self.residuals[path_id][self.support[path_id]] for path_id in self.residuals]
        return max((float(numpy.max(values)) for values in on_support if values.size), default=0.0)

    def support_residuals(self, path_id: str):
        """(departure times, residuals) of a path restricted to its support."""
        mask = self.support[path_id]
        return self.departure_times[mask], self.residuals[path_id][mask]

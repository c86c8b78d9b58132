from typing import List
import numpy


COLUMNS = ("n", "input_l2", "sup_D", "sup_Psi", "l2_Psi", "clipped", "truncated")


class ConvergenceReport:
    """Distances between the delays of every sequence term and those of the base.

    Every row is a dict with the keys in COLUMNS plus "sup_cumulative" (largest distance between
    cumulative departures) and the per-path dicts "sup_D_by_path" and "sup_Psi_by_path". Distances of
    truncated terms are NaN; these terms are left out of the ratios.
    """
    def __init__(self, rows: List[dict], duration: float):
        self.rows = list(rows)
        self.duration = float(duration)

    def __len__(self):
        return len(self.rows)

    def series(self, key: str) -> numpy.ndarray:
        return numpy.array([row[key] for row in self.rows if not row["truncated"]], dtype="float")

    def decay_ratio(self, key: str = "sup_Psi") -> float:
        """Last over first value of a series; 0 when the first is 0."""
        values = self.series(key)
        if values.size == 0 or values[0] == 0:
            return 0.0
        return float(values[-1] / values[0])

    def quarter_ratio(self, key: str = "sup_Psi") -> float:
        """Largest value in the last quarter over largest value in the first quarter of a series."""
        values = self.series(key)
        quarter = max(1, values.size // 4)
        if values.size == 0 or numpy.max(values[:quarter]) == 0:
            return 0.0
        return float(numpy.max(values[-quarter:]) / numpy.max(values[:quarter]))

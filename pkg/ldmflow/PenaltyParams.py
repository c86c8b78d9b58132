import numpy


class PenaltyParams:
    """Schedule-deviation penalty around a target arrival time.

    The penalty of arriving x time units after the target (x < 0 for early arrival) is

    .. code-block:: none

        F(x) = early_coeff * max(0, -x) + late_coeff * max(0, x)

    """
    def __init__(self, target: float, early_coeff: float = 0.0, late_coeff: float = 0.0):
        assert early_coeff >= 0, "Expected 'early_coeff' to be nonnegative."
        assert late_coeff >= 0, "Expected 'late_coeff' to be nonnegative."
        self.target = float(target)
        self.early_coeff = float(early_coeff)
        self.late_coeff = float(late_coeff)

    def __eq__(self, other):
        return \
            self.target == other.target and \
            self.early_coeff == other.early_coeff and \
            self.late_coeff == other.late_coeff

    def __repr__(self):
        return "PenaltyParams(target={0}, early_coeff={1}, late_coeff={2})".format(
            self.target, self.early_coeff, self.late_coeff)

    def __call__(self, deviation):
        result = self.early_coeff * numpy.maximum(0.0, -numpy.asarray(deviation, dtype="float")) + \
            self.late_coeff * numpy.maximum(0.0, numpy.asarray(deviation, dtype="float"))
        return float(result) if numpy.ndim(result) == 0 else result

    @property
    def max_slope(self) -> float:
        return max(self.early_coeff, self.late_coeff)

import numpy
from .CumulativeCurve import CumulativeCurve
from .constants import TIME_TOLERANCE
from .exceptions import HorizonExhaustedError
from .utils import as_nondecreasing
from .utils import interpolate
from .utils import merge_grids


class ExitTimeFunction:
    """Piecewise-linear map from arc entry time to arc exit time.

    Before the first breakpoint the map is ``t + beta``: nobody has entered the arc yet. After the last
    breakpoint the map continues with unit slope when the arc is drained, and is undefined otherwise
    (evaluation raises :class:`ldmflow.exceptions.HorizonExhaustedError`).

    Strict monotonicity is not enforced on construction so that :func:`ldmflow.validation.monotonicity_audit`
    can report it; the inverse does require it.
    """
    def __init__(self, times, values, beta: float, drained: bool = False):
        times = numpy.asarray(times, dtype="float")
        values = numpy.asarray(values, dtype="float")
        assert times.ndim == 1 and times.shape == values.shape, \
            "Input arguments 'times' and 'values' should be one-dimensional and of the same shape."
        assert times.size > 0, "An exit time function needs at least one breakpoint."
        assert numpy.all(numpy.diff(times) > 0), "Breakpoint times should be strictly increasing."
        assert beta > 0, "Expected 'beta' to be strictly positive."
        self._times = times
        self._values = values
        self.beta = float(beta)
        self.drained = bool(drained)
        self._increasing = bool(numpy.all(numpy.diff(values) > 0))

    def __eq__(self, other):
        return \
            self._times.shape == other.times.shape and \
            numpy.allclose(self._times, other.times) and \
            numpy.allclose(self._values, other.values) and \
            self.beta == other.beta and \
            self.drained == other.drained

    def __repr__(self):
        return "ExitTimeFunction({0} breakpoints on [{1}, {2}], beta={3}, drained={4})".format(
            self._times.size, self._times[0], self._times[-1], self.beta, self.drained)

    def __call__(self, t):
        t_array = numpy.asarray(t, dtype="float")
        if not self.drained and numpy.any(t_array > self._times[-1] + TIME_TOLERANCE):
            raise HorizonExhaustedError(
                "Exit time requested at t={0} beyond loaded horizon {1}.".format(
                    float(numpy.max(t_array)), self._times[-1]))
        result = numpy.interp(t_array, self._times, self._values)
        result = numpy.where(t_array < self._times[0], self._values[0] + (t_array - self._times[0]), result)
        if self.drained:
            result = numpy.where(t_array > self._times[-1], self._values[-1] + (t_array - self._times[-1]), result)
        return float(result) if result.ndim == 0 else result

    @property
    def times(self):
        """getter method for times private variable"""
        return self._times.copy()

    @property
    def values(self):
        """getter method for values private variable"""
        return self._values.copy()

    @property
    def is_increasing(self) -> bool:
        return self._increasing

    def slopes(self) -> numpy.ndarray:
        return numpy.diff(self._values) / numpy.diff(self._times)

    def inverse(self, s: float) -> float:
        """Entry time of the vehicle exiting at s.

        Args:
        ----
        s:
            Exit time. Below the first exit value the ``s - beta`` rule applies; beyond the last one
            the arc must be drained.
        """
        assert self._increasing, "Exit time function is not strictly increasing."
        if s <= self._values[0]:
            return float(self._times[0] + (s - self._values[0]))
        if s > self._values[-1]:
            if not self.drained and s > self._values[-1] + TIME_TOLERANCE:
                raise HorizonExhaustedError(
                    "Exit time s={0} beyond loaded horizon {1}.".format(s, self._values[-1]))
            return float(self._times[-1] + (s - self._values[-1]))
        return float(interpolate(self._values, self._times, s))

    def compose_inverse(self, curve: CumulativeCurve, lo: float, hi: float) -> CumulativeCurve:
        """Exact piecewise-linear composition ``curve(inverse(s))`` for s in [lo, hi].

        Breakpoints of the composition are the exit values of this map inside the window and the
        images of the breakpoints of 'curve' whose exit falls inside the window.
        """
        assert lo < hi, "Expected 'lo' to be smaller than 'hi'."
        entry_lo = self.inverse(lo)
        entry_hi = self.inverse(hi)
        own = self._values[(self._values > lo) & (self._values < hi)]
        curve_times = curve.times
        mapped = curve_times[(curve_times > entry_lo) & (curve_times < entry_hi)]
        images = numpy.asarray(self(mapped), dtype="float") if mapped.size else mapped
        grid = merge_grids([lo], own, images[(images > lo) & (images < hi)], [hi])
        values = [curve(self.inverse(s)) for s in grid]
        return CumulativeCurve(grid, as_nondecreasing(values))

import numpy
from .utils import merge_grids
from .utils import normalize_breakpoints


class CumulativeCurve:
    """Continuous nondecreasing piecewise-linear vehicle count.

    The curve interpolates linearly between breakpoints and is constant beyond both ends.
    Collinear breakpoints are merged on construction.

    For example

    .. code-block:: python

        from ldmflow import CumulativeCurve

        curve = CumulativeCurve(times=[0.0, 2.0], values=[0.0, 20.0])
        print(curve(1.0), curve(5.0))

    Should output

    .. code-block:: console

        10.0 20.0

    """
    def __init__(self, times, values):
        times = numpy.asarray(times, dtype="float")
        values = numpy.asarray(values, dtype="float")
        assert times.ndim == 1 and times.shape == values.shape, \
            "Input arguments 'times' and 'values' should be one-dimensional and of the same shape."
        assert times.size > 0, "A cumulative curve needs at least one breakpoint."
        assert numpy.all(numpy.diff(times) > 0), "Breakpoint times should be strictly increasing."
        assert numpy.all(numpy.diff(values) >= 0), "Cumulative counts should be nondecreasing."
        self._times, self._values = normalize_breakpoints(times, values)

    def __call__(self, t):
        result = numpy.interp(t, self._times, self._values)
        return float(result) if numpy.ndim(result) == 0 else result

    def __eq__(self, other):
        return \
            self._times.shape == other.times.shape and \
            numpy.allclose(self._times, other.times) and \
            numpy.allclose(self._values, other.values)

    def __add__(self, other: "CumulativeCurve") -> "CumulativeCurve":
        grid = merge_grids(self._times, other.times)
        return CumulativeCurve(grid, numpy.maximum.accumulate(self(grid) + other(grid)))

    def __len__(self):
        return self._times.size

    def __repr__(self):
        return "CumulativeCurve({0} breakpoints, total={1})".format(self._times.size, self.total)

    @classmethod
    def zero(cls, t0: float) -> "CumulativeCurve":
        return cls([t0], [0.0])

    @property
    def times(self):
        """getter method for times private variable"""
        return self._times.copy()

    @property
    def values(self):
        """getter method for values private variable"""
        return self._values.copy()

    @property
    def start(self) -> float:
        return float(self._times[0])

    @property
    def end(self) -> float:
        return float(self._times[-1])

    @property
    def total(self) -> float:
        return float(self._values[-1])

    def slopes(self) -> numpy.ndarray:
        return numpy.diff(self._values) / numpy.diff(self._times)

    def truncate(self, until: float) -> "CumulativeCurve":
        """Same curve up to 'until', held constant afterwards."""
        if until >= self._times[-1]:
            return CumulativeCurve(self._times, self._values)
        if until <= self._times[0]:
            return CumulativeCurve(self._times[:1], self._values[:1])
        keep = self._times < until
        times = numpy.append(self._times[keep], until)
        return CumulativeCurve(times, numpy.maximum.accumulate(numpy.append(self._values[keep], self(until))))

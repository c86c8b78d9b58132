import numpy
from .utils import merge_grids


class PathFlow:
    """Piecewise-constant departure rate of one path.

    ``rates[i]`` applies on ``[breakpoints[i], breakpoints[i + 1])``; the rate is zero outside
    ``[breakpoints[0], breakpoints[-1])``. Signs are not checked here so that infeasible flows can be
    represented and reported by :func:`ldmflow.validation.check_feasibility`.
    """
    def __init__(self, breakpoints, rates):
        breakpoints = numpy.asarray(breakpoints, dtype="float")
        rates = numpy.asarray(rates, dtype="float")
        assert breakpoints.ndim == 1 and breakpoints.size >= 2, "A path flow needs at least two breakpoints."
        assert rates.shape == (breakpoints.size - 1,), \
            "Expected one rate less than the number of breakpoints."
        assert numpy.all(numpy.diff(breakpoints) > 0), "Breakpoints should be strictly increasing."
        self._breakpoints = breakpoints
        self._rates = rates

    def __call__(self, t):
        t = numpy.asarray(t, dtype="float")
        index = numpy.searchsorted(self._breakpoints, t, side="right") - 1
        inside = (index >= 0) & (index < self._rates.size)
        result = numpy.where(inside, self._rates[numpy.clip(index, 0, self._rates.size - 1)], 0.0)
        return float(result) if result.ndim == 0 else result

    def __eq__(self, other):
        return \
            self._breakpoints.shape == other.breakpoints.shape and \
            numpy.allclose(self._breakpoints, other.breakpoints) and \
            numpy.allclose(self._rates, other.rates)

    def __add__(self, other: "PathFlow") -> "PathFlow":
        grid = merge_grids(self._breakpoints, other.breakpoints)
        return PathFlow(grid, self.rates_on(grid) + other.rates_on(grid))

    def __sub__(self, other: "PathFlow") -> "PathFlow":
        return self + other.scale(-1.0)

    def __repr__(self):
        return "PathFlow({0} slots on [{1}, {2}], volume={3})".format(
            self._rates.size, self._breakpoints[0], self._breakpoints[-1], self.volume)

    @classmethod
    def zero(cls, t0: float, tf: float) -> "PathFlow":
        return cls([t0, tf], [0.0])

    @property
    def breakpoints(self):
        """getter method for breakpoints private variable"""
        return self._breakpoints.copy()

    @property
    def rates(self):
        """getter method for rates private variable"""
        return self._rates.copy()

    @property
    def widths(self) -> numpy.ndarray:
        return numpy.diff(self._breakpoints)

    @property
    def volume(self) -> float:
        return float(numpy.sum(self._rates * self.widths))

    @property
    def sup_norm(self) -> float:
        return float(numpy.max(numpy.abs(self._rates)))

    def integral(self, t):
        """Volume departed up to time t (exact, vectorized)."""
        cumulative = numpy.concatenate([[0.0], numpy.cumsum(self._rates * self.widths)])
        result = numpy.interp(t, self._breakpoints, cumulative)
        return float(result) if numpy.ndim(result) == 0 else result

    def slot_rates(self, grid) -> numpy.ndarray:
        """Average rate of this flow on every slot of 'grid'.

        Exact for any grid; equal to the pointwise rate when 'grid' refines the breakpoints.
        """
        grid = numpy.asarray(grid, dtype="float")
        return numpy.diff(self.integral(grid)) / numpy.diff(grid)

    def rates_on(self, grid) -> numpy.ndarray:
        """Rate on every slot of a grid that refines the breakpoints, without averaging."""
        grid = numpy.asarray(grid, dtype="float")
        return numpy.asarray(self(grid[:-1]), dtype="float").reshape(-1)

    def on_grid(self, grid) -> "PathFlow":
        return PathFlow(grid, self.slot_rates(grid))

    def scale(self, factor: float) -> "PathFlow":
        return PathFlow(self._breakpoints, factor * self._rates)

    def clip(self) -> "PathFlow":
        """Negative rates set to zero."""
        return PathFlow(self._breakpoints, numpy.maximum(self._rates, 0.0))

    def shift(self, offset: float) -> "PathFlow":
        return PathFlow(self._breakpoints + offset, self._rates)

    def restrict(self, t0: float, tf: float) -> "PathFlow":
        """Part of the flow inside [t0, tf], defined on a grid starting at t0 and ending at tf."""
        inner = self._breakpoints[(self._breakpoints > t0) & (self._breakpoints < tf)]
        grid = numpy.concatenate([[t0], inner, [tf]])
        return self.on_grid(grid)

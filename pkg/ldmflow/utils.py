import bisect
import numpy
from .constants import COLLINEAR_TOLERANCE
from .constants import TIME_TOLERANCE


def interpolate(xs, ys, x):
    """Evaluate the piecewise-linear function through (xs, ys) at scalar x.

    Values are extended as constants beyond both ends. Works on plain (growing) lists
    through bisect, so that the incremental loaders avoid copying into numpy arrays.

    Args:
    ----
    xs: list of float
        Sorted, strictly increasing abscissae.
    ys: list of float
        Ordinates, same length as xs.
    x: float
        Point of evaluation.
    """
    if x <= xs[0]:
        return ys[0]
    if x >= xs[-1]:
        return ys[-1]
    i = bisect.bisect_right(xs, x)
    x0, x1 = xs[i - 1], xs[i]
    y0, y1 = ys[i - 1], ys[i]
    if x == x0:
        return y0
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def merge_grids(*grids) -> numpy.ndarray:
    """Sorted union of time grids, with breakpoints closer than TIME_TOLERANCE merged."""
    arrays = [numpy.asarray(grid, dtype="float").ravel() for grid in grids]
    merged = numpy.unique(numpy.concatenate(arrays)) if arrays else numpy.array([], dtype="float")
    if merged.size < 2:
        return merged
    keep = numpy.concatenate([[True], numpy.diff(merged) > TIME_TOLERANCE])
    return merged[keep]


def midpoints(grid: numpy.ndarray) -> numpy.ndarray:
    return (grid[:-1] + grid[1:]) / 2


def trapezoid_weights(grid: numpy.ndarray) -> numpy.ndarray:
    """Quadrature weights of the trapezoid rule on grid; they sum to grid[-1] - grid[0]."""
    weights = numpy.zeros_like(grid, dtype="float")
    if grid.size < 2:
        return weights
    widths = numpy.diff(grid)
    weights[:-1] += widths / 2
    weights[1:] += widths / 2
    return weights


def as_nondecreasing(values) -> numpy.ndarray:
    """Remove rounding-level decreases from a sequence of vehicle counts."""
    return numpy.maximum.accumulate(numpy.asarray(values, dtype="float"))


def _collinear(t0, v0, t1, v1, t2, v2):
    slope_left = (v1 - v0) / (t1 - t0)
    slope_right = (v2 - v1) / (t2 - t1)
    scale = 1.0 + abs(slope_left) + abs(slope_right)
    return abs(slope_left - slope_right) <= COLLINEAR_TOLERANCE * scale


def normalize_breakpoints(times, values):
    """Drop breakpoints closer than TIME_TOLERANCE to their predecessor and merge collinear ones.

    Returns
    -------
    Tuple of numpy arrays (times, values). Values of the remaining breakpoints are unchanged.
    """
    kept_times = []
    kept_values = []
    for t, v in zip(times, values):
        t = float(t)
        v = float(v)
        if kept_times and t - kept_times[-1] <= TIME_TOLERANCE:
            continue
        if len(kept_times) >= 2 and _collinear(kept_times[-2], kept_values[-2],
                                               kept_times[-1], kept_values[-1], t, v):
            kept_times[-1] = t
            kept_values[-1] = v
            continue
        kept_times.append(t)
        kept_values.append(v)
    return numpy.array(kept_times, dtype="float"), numpy.array(kept_values, dtype="float")


def format_number(value) -> str:
    """Full-precision text for a number: 17 significant digits, stable across runs."""
    return "{:.17g}".format(float(value))

import numpy


def sup_distance(f, g) -> float:
    """Largest absolute difference of two functions sampled on a common grid.

    For piecewise-linear functions the result is exact when the grid holds the breakpoints of both.
    """
    f = numpy.asarray(f, dtype="float")
    g = numpy.asarray(g, dtype="float")
    assert f.size > 0, "Expected a nonempty evaluation grid."
    assert f.shape == g.shape, "Expected both functions to be sampled on the same grid."
    return float(numpy.max(numpy.abs(f - g)))

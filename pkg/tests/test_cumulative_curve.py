import numpy
import pytest
from ldmflow import CumulativeCurve


def test_cumulative_curve_evaluation():
    curve = CumulativeCurve(times=[0.0, 2.0], values=[0.0, 20.0])

    assert curve(1.0) == 10.0
    assert curve(-1.0) == 0.0
    assert curve(5.0) == 20.0
    assert numpy.allclose(curve(numpy.array([0.5, 1.5])), [5.0, 15.0])


def test_cumulative_curve_merges_collinear_breakpoints():
    curve = CumulativeCurve(times=[0.0, 1.0, 2.0, 3.0], values=[0.0, 1.0, 2.0, 2.0])

    assert numpy.allclose(curve.times, [0.0, 2.0, 3.0])
    assert numpy.allclose(curve.values, [0.0, 2.0, 2.0])
    assert curve.total == 2.0


def test_cumulative_curve_add():
    first = CumulativeCurve([0.0, 1.0], [0.0, 10.0])
    second = CumulativeCurve([0.5, 2.0], [0.0, 3.0])

    summed = first + second

    assert summed(0.5) == pytest.approx(5.0)
    assert summed(1.0) == pytest.approx(11.0)
    assert summed(2.0) == pytest.approx(13.0)
    assert numpy.allclose(summed.slopes(), [10.0, 12.0, 2.0])


def test_cumulative_curve_truncate():
    curve = CumulativeCurve([0.0, 2.0], [0.0, 20.0])

    truncated = curve.truncate(1.0)

    assert truncated.end == 1.0
    assert truncated(3.0) == 10.0


def test_cumulative_curve_decreasing_counts():
    with pytest.raises(AssertionError) as msg:
        _ = CumulativeCurve([0.0, 1.0], [2.0, 1.0])

    assert str(msg.value) == "Cumulative counts should be nondecreasing."


def test_cumulative_curve_unsorted_times():
    with pytest.raises(AssertionError) as msg:
        _ = CumulativeCurve([1.0, 0.0], [0.0, 1.0])

    assert str(msg.value) == "Breakpoint times should be strictly increasing."


def test_cumulative_curve_shape_mismatch():
    with pytest.raises(AssertionError) as msg:
        _ = CumulativeCurve([0.0, 1.0, 2.0], [0.0, 1.0])

    assert str(msg.value) == "Input arguments 'times' and 'values' should be one-dimensional and of the same shape."


def test_cumulative_curve_zero():
    curve = CumulativeCurve.zero(2.0)

    assert curve.start == 2.0
    assert curve(10.0) == 0.0

import numpy
import pytest
from ldmflow import Arc
from ldmflow import CumulativeCurve
from ldmflow import TimeHorizon
from ldmflow.loading import invert_exit_time
from ldmflow.loading import load_arc


def test_load_arc_constant_inflow():
    """Inflow 10 on [0, 1] into an arc with delay 0.01 * X + 1."""
    arc = Arc("a", "1", "2", alpha=0.01, beta=1.0)
    entry = CumulativeCurve([0.0, 1.0], [0.0, 10.0])

    tau, exit_curve = load_arc(arc, entry, TimeHorizon(0.0, 1.0))

    t = numpy.linspace(0.0, 1.0, 11)
    assert numpy.allclose(tau(t), 1.1 * t + 1.0, rtol=0, atol=1e-9)
    assert tau(0.5) == pytest.approx(1.55, abs=1e-9)
    assert tau.drained
    assert exit_curve(1.0) == 0.0
    assert exit_curve(2.1) == pytest.approx(10.0, abs=1e-9)
    s = numpy.linspace(1.0, 2.1, 12)
    assert numpy.allclose(exit_curve(s), 10 / 1.1 * (s - 1.0), rtol=0, atol=1e-9)


def test_load_arc_empty_arc_is_free_flow():
    arc = Arc("a", "1", "2", alpha=0.5, beta=2.0)
    entry = CumulativeCurve.zero(0.0)

    tau, exit_curve = load_arc(arc, entry, TimeHorizon(0.0, 1.0))

    assert tau(0.3) == pytest.approx(2.3, abs=1e-12)
    assert exit_curve.total == 0.0


def test_invert_exit_time():
    arc = Arc("a", "1", "2", alpha=0.01, beta=1.0)
    tau, _ = load_arc(arc, CumulativeCurve([0.0, 1.0], [0.0, 10.0]), TimeHorizon(0.0, 1.0))

    assert invert_exit_time(tau, 1.55) == pytest.approx(0.5, abs=1e-9)
    assert invert_exit_time(tau, 0.25) == -0.75


def test_load_arc_entry_not_starting_at_zero():
    arc = Arc("a", "1", "2", alpha=0.01, beta=1.0)

    with pytest.raises(AssertionError) as msg:
        load_arc(arc, CumulativeCurve([0.0, 1.0], [1.0, 2.0]), TimeHorizon(0.0, 1.0))

    assert str(msg.value) == "Expected the entry curve to start at 0 vehicles."


def test_load_arc_entry_before_horizon():
    arc = Arc("a", "1", "2", alpha=0.01, beta=1.0)

    with pytest.raises(AssertionError) as msg:
        load_arc(arc, CumulativeCurve([-1.0, 1.0], [0.0, 2.0]), TimeHorizon(0.0, 1.0))

    assert str(msg.value) == "Expected the entry curve to start within the horizon."


def test_load_arc_exits_depend_only_on_earlier_entries():
    """Exits up to s + beta are fixed by the entries up to s."""
    arc = Arc("a", "1", "2", alpha=0.01, beta=1.0)
    entry = CumulativeCurve([0.0, 1.0, 2.0], [0.0, 10.0, 12.0])
    horizon = TimeHorizon(0.0, 2.0)
    s = 1.0

    tau, exit_curve = load_arc(arc, entry, horizon)
    tau_cut, exit_cut = load_arc(arc, entry.truncate(s), horizon)

    early = numpy.linspace(0.0, s, 21)
    assert numpy.allclose(tau(early), tau_cut(early), rtol=0, atol=1e-9)
    exits = numpy.linspace(0.0, s + arc.beta, 41)
    assert numpy.allclose(exit_curve(exits), exit_cut(exits), rtol=0, atol=1e-9)
    assert exit_curve(3.5) > exit_cut(3.5)

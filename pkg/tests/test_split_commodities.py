import numpy
import pytest
from ldmflow import Arc
from ldmflow import ArcState
from ldmflow import CumulativeCurve
from ldmflow import TimeHorizon
from ldmflow.loading import load_arc
from ldmflow.loading import split_commodities


def loaded_state(commodity_entry):
    arc = Arc("a", "1", "2", alpha=0.01, beta=1.0)
    entry = CumulativeCurve([0.0, 1.0], [0.0, 10.0])
    tau, exit_curve = load_arc(arc, entry, TimeHorizon(0.0, 1.0))
    return ArcState("a", entry, exit_curve, tau, commodity_entry=commodity_entry)


def test_split_commodities_equal_rates_exit_equally():
    state = loaded_state({"p": CumulativeCurve([0.0, 1.0], [0.0, 5.0]),
                          "q": CumulativeCurve([0.0, 1.0], [0.0, 5.0])})

    split = split_commodities(state)

    s = numpy.linspace(0.0, 2.5, 26)
    assert numpy.allclose(split.commodity_exit["p"](s), split.commodity_exit["q"](s), rtol=0, atol=1e-12)
    assert numpy.allclose(split.commodity_exit["p"](s), state.exit(s) / 2, rtol=0, atol=1e-9)
    assert not state.commodity_exit


def test_split_commodities_empty_commodity_never_exits():
    state = loaded_state({"p": CumulativeCurve([0.0, 1.0], [0.0, 10.0]),
                          "z": CumulativeCurve.zero(0.0)})

    split = split_commodities(state)

    s = numpy.linspace(0.0, 2.5, 26)
    assert numpy.all(split.commodity_exit["z"](s) == 0.0)
    assert split.commodity_exit["p"].total == pytest.approx(10.0, abs=1e-9)


def test_split_commodities_counts_do_not_sum():
    state = loaded_state({"p": CumulativeCurve([0.0, 1.0], [0.0, 4.0])})

    with pytest.raises(AssertionError) as msg:
        split_commodities(state)

    assert str(msg.value) == "Commodity entry counts do not sum to the arc entry counts."

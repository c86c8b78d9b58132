import numpy
import pytest
from ldmflow import Arc
from ldmflow import CumulativeCurve
from ldmflow import Network
from ldmflow import Path
from ldmflow import PathFlow
from ldmflow import PathFlowVector
from ldmflow import TimeHorizon
from ldmflow import TripTable
from ldmflow.flows import cumulate
from ldmflow.flows import eval_curve
from ldmflow.flows import l2_distance
from ldmflow.flows import sup_distance
from ldmflow.flows import uniform_flows


def test_cumulate_slopes_equal_rates():
    flow = PathFlow([0.0, 1.0, 3.0], [4.0, 1.0])

    curve = cumulate(flow, TimeHorizon(0.0, 4.0))

    assert curve(1.0) == 4.0
    assert curve(3.0) == 6.0
    assert curve(4.0) == 6.0
    assert numpy.allclose(curve.slopes(), [4.0, 1.0])


def test_cumulate_starts_at_t0():
    flow = PathFlow([1.0, 2.0], [3.0])

    curve = cumulate(flow, TimeHorizon(0.0, 4.0))

    assert curve.start == 0.0
    assert curve(1.0) == 0.0
    assert curve(2.0) == 3.0


def test_cumulate_ignores_flow_outside_horizon():
    flow = PathFlow([-1.0, 1.0, 5.0], [2.0, 1.0])

    curve = cumulate(flow, TimeHorizon(0.0, 4.0))

    assert curve.start == 0.0
    assert curve.total == pytest.approx(5.0)


def test_eval_curve():
    curve = CumulativeCurve([0.0, 2.0], [0.0, 20.0])

    assert eval_curve(curve, 1.0) == 10.0
    assert numpy.allclose(eval_curve(curve, numpy.array([-1.0, 3.0])), [0.0, 20.0])


def test_l2_distance_exact_on_merged_breakpoints():
    h = PathFlowVector({"p": PathFlow([0.0, 2.0], [1.0]), "q": PathFlow([0.0, 1.0], [1.0])})
    g = PathFlowVector({"p": PathFlow([0.0, 1.0, 2.0], [1.0, 3.0]), "q": PathFlow([0.0, 1.0], [1.0])})

    assert l2_distance(h, g) == pytest.approx(2.0)
    assert l2_distance(h, h) == 0.0


def test_l2_distance_different_paths():
    h = PathFlowVector({"p": PathFlow([0.0, 1.0], [1.0])})
    g = PathFlowVector({"q": PathFlow([0.0, 1.0], [1.0])})

    with pytest.raises(AssertionError) as msg:
        l2_distance(h, g)

    assert str(msg.value) == "Path flow vectors should cover the same paths."


def random_vector(random_state):
    vector = {}
    for path_id in ["p", "q"]:
        breakpoints = numpy.unique(numpy.concatenate([[0.0, 4.0], random_state.uniform(0.0, 4.0, 3)]))
        vector[path_id] = PathFlow(breakpoints, random_state.uniform(0.0, 5.0, breakpoints.size - 1))
    return PathFlowVector(vector)


def test_l2_distance_is_a_metric():
    random_state = numpy.random.RandomState(7)
    for _ in range(20):
        h, g, k = (random_vector(random_state) for _ in range(3))

        assert l2_distance(h, g) == pytest.approx(l2_distance(g, h), abs=1e-12)
        assert l2_distance(h, k) <= l2_distance(h, g) + l2_distance(g, k) + 1e-9
        assert l2_distance(h, g) > 0


def test_sup_distance():
    assert sup_distance([0.0, 1.0, 2.0], [0.5, 1.0, 0.0]) == 2.0


def test_sup_distance_shape_mismatch():
    with pytest.raises(AssertionError) as msg:
        sup_distance([0.0, 1.0], [0.0])

    assert str(msg.value) == "Expected both functions to be sampled on the same grid."


def test_uniform_flows_spread_demand():
    arcs = [Arc("a", "1", "2", alpha=0.01, beta=1.0), Arc("b", "1", "2", alpha=0.01, beta=1.0)]
    paths = [Path("p", ("1", "2"), ["a"]), Path("q", ("1", "2"), ["b"])]
    network = Network(["1", "2"], arcs, paths, TripTable({("1", "2"): 10.0}))

    h = uniform_flows(network, TimeHorizon(0.0, 4.0), 4)

    assert numpy.allclose(h["p"].rates, 1.25)
    assert numpy.allclose(h["q"].breakpoints, [0.0, 1.0, 2.0, 3.0, 4.0])
    assert sum(h.volumes().values()) == pytest.approx(10.0)

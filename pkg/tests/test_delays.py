import numpy
import pytest
from ldmflow import Arc
from ldmflow import Network
from ldmflow import Path
from ldmflow import PathFlow
from ldmflow import PathFlowVector
from ldmflow import PenaltyParams
from ldmflow import TimeHorizon
from ldmflow import TripTable
from ldmflow.delays import delay_field
from ldmflow.delays import effective_delay
from ldmflow.delays import penalty
from ldmflow.loading import load_network


def loaded_single_arc():
    network = Network(["1", "2"], [Arc("a", "1", "2", alpha=0.01, beta=1.0)],
                      [Path("p", ("1", "2"), ["a"])], TripTable({("1", "2"): 10.0}))
    h = PathFlowVector({"p": PathFlow([0.0, 1.0], [10.0])})
    return network, load_network(network, h, TimeHorizon(0.0, 1.0))


def test_penalty_early_and_late():
    params = PenaltyParams(target=2.0, early_coeff=0.5, late_coeff=2.0)

    assert penalty(params, -0.45) == pytest.approx(0.225)
    assert penalty(params, 0.0) == 0.0
    assert penalty(params, 0.25) == 0.5
    assert numpy.allclose(penalty(params, numpy.array([-1.0, 1.0])), [0.5, 2.0])


def test_penalty_params_negative_coefficient():
    with pytest.raises(AssertionError) as msg:
        _ = PenaltyParams(target=2.0, early_coeff=-0.5)

    assert str(msg.value) == "Expected 'early_coeff' to be nonnegative."


def test_effective_delay_single_arc():
    network, result = loaded_single_arc()
    params = PenaltyParams(target=2.0, early_coeff=0.5, late_coeff=2.0)

    assert effective_delay(result, network, params, "p", 0.5) == pytest.approx(1.275, abs=1e-9)


def test_effective_delay_without_penalty_is_path_delay():
    network, result = loaded_single_arc()

    assert effective_delay(result, network, PenaltyParams(target=2.0), "p", 0.5) == pytest.approx(1.05, abs=1e-9)


def test_delay_field_single_arc():
    network, result = loaded_single_arc()
    params = PenaltyParams(target=2.0, early_coeff=0.5, late_coeff=2.0)
    grid = numpy.linspace(0.0, 1.0, 11)

    field = delay_field(result, network, params, grid)

    assert numpy.allclose(field.delays["p"], 1.0 + 0.1 * grid, atol=1e-9)
    assert field.effective["p"][5] == pytest.approx(1.275, abs=1e-9)
    assert field.od_minimum[("1", "2")] == pytest.approx(1.095, abs=1e-9)
    assert field.refinement_delta[("1", "2")] == 0.0
    assert numpy.all(field.residuals("p") >= 0)
    assert field.weights.sum() == pytest.approx(1.0)


def test_delay_field_grid_outside_horizon():
    network, result = loaded_single_arc()

    with pytest.raises(AssertionError) as msg:
        delay_field(result, network, PenaltyParams(target=2.0), numpy.array([0.0, 2.0]))

    assert str(msg.value) == "Departure grid should lie within the planning horizon."


def test_delay_field_higher_late_coefficient():
    network, result = loaded_single_arc()
    grid = numpy.linspace(0.0, 1.0, 11)

    low = delay_field(result, network, PenaltyParams(target=2.0, early_coeff=0.5, late_coeff=2.0), grid)
    high = delay_field(result, network, PenaltyParams(target=2.0, early_coeff=0.5, late_coeff=4.0), grid)

    early = grid + low.delays["p"] < 2.0
    assert numpy.all(high.effective["p"] >= low.effective["p"])
    assert numpy.array_equal(high.effective["p"][early], low.effective["p"][early])
    assert high.effective["p"][-1] - low.effective["p"][-1] == pytest.approx(2.0 * 0.1, abs=1e-9)


def test_effective_delay_change_bounded_by_path_delay_change():
    network, result = loaded_single_arc()
    other = load_network(network, PathFlowVector({"p": PathFlow([0.0, 0.5, 1.0], [12.0, 8.0])}),
                         TimeHorizon(0.0, 1.0))
    params = PenaltyParams(target=2.0, early_coeff=0.5, late_coeff=2.0)
    grid = numpy.linspace(0.0, 1.0, 21)

    field = delay_field(result, network, params, grid)
    other_field = delay_field(other, network, params, grid)

    delay_change = numpy.abs(field.delays["p"] - other_field.delays["p"])
    effective_change = numpy.abs(field.effective["p"] - other_field.effective["p"])
    assert numpy.any(delay_change > 0)
    assert numpy.all(effective_change <= (1.0 + params.max_slope) * delay_change + 1e-12)


def test_delay_field_minimum_under_grid_refinement():
    """Effective delay is 1.5 - 0.45 t before t = 1 / 1.1 and 2.3 t - 1 after."""
    network, result = loaded_single_arc()
    params = PenaltyParams(target=2.0, early_coeff=0.5, late_coeff=2.0)

    coarse = delay_field(result, network, params, numpy.linspace(0.0, 1.0, 6))
    fine = delay_field(result, network, params, numpy.linspace(0.0, 1.0, 101))

    od = ("1", "2")
    assert coarse.od_minimum[od] == pytest.approx(1.14, abs=1e-9)
    assert coarse.refinement_delta[od] == pytest.approx(0.045, abs=1e-9)
    assert fine.od_minimum[od] == pytest.approx(1.093, abs=1e-9)
    assert fine.refinement_delta[od] == pytest.approx(0.00025, abs=1e-9)
    assert 0.0 <= coarse.od_minimum[od] - fine.od_minimum[od] <= 2.3 * 0.2
    assert fine.od_minimum[od] >= 1.0 / 1.1 * (-0.45) + 1.5 - 1e-9

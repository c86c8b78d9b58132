import numpy
import pytest
from ldmflow import Arc
from ldmflow import DelayField
from ldmflow import Network
from ldmflow import Path
from ldmflow import PathFlow
from ldmflow import PathFlowVector
from ldmflow import TripTable
from ldmflow.equilibrium import gap


OD = ("1", "2")


def toy_field():
    return DelayField(grid=[0.5, 1.5], delays={"p": numpy.zeros(2)}, effective={"p": numpy.array([1.0, 2.0])},
                      od_minimum={OD: 1.0}, path_od={"p": OD}, weights=[1.0, 1.0])


def test_gap_weights_residuals_with_flow():
    h = PathFlowVector({"p": PathFlow([0.0, 1.0, 2.0], [1.0, 3.0])})

    assert gap(h, toy_field()) == pytest.approx(3.0)


def test_gap_zero_on_minimal_slot():
    h = PathFlowVector({"p": PathFlow([0.0, 1.0, 2.0], [4.0, 0.0])})

    assert gap(h, toy_field()) == 0.0


def test_gap_infeasible_flows():
    network = Network(["1", "2"], [Arc("a", "1", "2", alpha=0.01, beta=1.0)], [Path("p", OD, ["a"])],
                      TripTable({OD: 10.0}))
    h = PathFlowVector({"p": PathFlow([0.0, 1.0, 2.0], [1.0, 3.0])})

    with pytest.raises(AssertionError) as msg:
        gap(h, toy_field(), network)

    assert str(msg.value) == \
        "Path flows are infeasible: OD ('1', '2'): departed volume 4.0 differs from demand 10.0 by 6.0."


def two_path_field(names):
    first, second = names
    return DelayField(grid=[0.5, 1.5], delays={first: numpy.zeros(2), second: numpy.zeros(2)},
                      effective={first: numpy.array([1.0, 2.0]), second: numpy.array([1.5, 1.0])},
                      od_minimum={OD: 1.0}, path_od={first: OD, second: OD}, weights=[1.0, 1.0])


def test_gap_unchanged_by_path_names():
    h = PathFlowVector({"p1": PathFlow([0.0, 1.0, 2.0], [1.0, 3.0]),
                        "p2": PathFlow([0.0, 1.0, 2.0], [2.0, 0.5])})
    renamed = PathFlowVector({"b": PathFlow([0.0, 1.0, 2.0], [2.0, 0.5]),
                              "a": PathFlow([0.0, 1.0, 2.0], [1.0, 3.0])})

    assert gap(h, two_path_field(("p1", "p2"))) == pytest.approx(4.0)
    assert gap(renamed, two_path_field(("a", "b"))) == pytest.approx(gap(h, two_path_field(("p1", "p2"))))

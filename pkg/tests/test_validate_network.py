from ldmflow import Arc
from ldmflow import Network
from ldmflow import Path
from ldmflow import TripTable
from ldmflow.validation import validate_network


def test_validate_network_valid():
    network = Network(["1", "2"], [Arc("a", "1", "2", alpha=0.01, beta=1.0)],
                      [Path("p", ("1", "2"), ["a"])], TripTable({("1", "2"): 10.0}))

    assert validate_network(network) == []


def test_validate_network_arc_parameters():
    network = Network(["1", "2"], [Arc("a", "1", "2", alpha=-0.01, beta=0.0)],
                      [Path("p", ("1", "2"), ["a"])], TripTable({("1", "2"): 10.0}))

    assert validate_network(network) == ["Arc 'a': beta must be strictly positive.",
                                         "Arc 'a': alpha must be nonnegative."]


def test_validate_network_unknown_node_and_duplicate_arc():
    arcs = [Arc("a", "1", "2", alpha=0.01, beta=1.0), Arc("a", "1", "9", alpha=0.01, beta=1.0)]
    network = Network(["1", "2"], arcs, [Path("p", ("1", "2"), ["a"])], TripTable({("1", "2"): 10.0}))

    assert validate_network(network) == ["Duplicate arc id 'a'.", "Arc 'a': unknown head node '9'."]


def test_validate_network_disconnected_path():
    arcs = [Arc("a1", "1", "2", alpha=0.01, beta=1.0), Arc("a2", "3", "4", alpha=0.01, beta=1.0)]
    network = Network(["1", "2", "3", "4"], arcs, [Path("p", ("1", "4"), ["a1", "a2"])],
                      TripTable({("1", "4"): 10.0}))

    assert validate_network(network) == [
        "Path 'p' is not connected: arc 'a1' ends at '2' but arc 'a2' starts at '3'."]


def test_validate_network_path_endpoints():
    network = Network(["1", "2", "3"], [Arc("a", "1", "2", alpha=0.01, beta=1.0)],
                      [Path("p", ("2", "3"), ["a"])], TripTable({("2", "3"): 10.0}))

    assert validate_network(network) == ["Path 'p' starts at '1' instead of its origin '2'.",
                                         "Path 'p' ends at '2' instead of its destination '3'."]


def test_validate_network_unknown_and_missing_arcs():
    network = Network(["1", "2"], [Arc("a", "1", "2", alpha=0.01, beta=1.0)],
                      [Path("p", ("1", "2"), ["b"]), Path("q", ("1", "2"), [])], TripTable({("1", "2"): 10.0}))

    assert validate_network(network) == ["Path 'p' references unknown arc 'b'.", "Path 'q' has no arcs."]


def test_validate_network_trip_table():
    network = Network(["1", "2", "3"], [Arc("a", "1", "2", alpha=0.01, beta=1.0)],
                      [Path("p", ("1", "2"), ["a"])], TripTable({("1", "2"): -1.0, ("1", "3"): 5.0}))

    assert validate_network(network) == ["OD ('1', '2'): demand must be nonnegative.",
                                         "OD ('1', '3') has no path."]


def test_validate_network_zero_demand_is_valid(caplog):
    network = Network(["1", "2"], [Arc("a", "1", "2", alpha=0.01, beta=1.0)],
                      [Path("p", ("1", "2"), ["a"])], TripTable({("1", "2"): 0.0}))

    assert validate_network(network) == []
    assert "zero demand" in caplog.text


def test_validate_network_repeated_arc():
    arcs = [Arc("a", "1", "2", alpha=0.01, beta=1.0), Arc("b", "2", "1", alpha=0.01, beta=1.0)]
    network = Network(["1", "2"], arcs, [Path("p", ("1", "2"), ["a", "b", "a"])], TripTable({("1", "2"): 1.0}))

    assert validate_network(network) == ["Path 'p' traverses arc 'a' more than once."]

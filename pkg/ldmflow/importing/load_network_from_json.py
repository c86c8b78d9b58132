import json
from ..Arc import Arc
from ..Network import Network
from ..Path import Path
from ..TripTable import TripTable


def load_network_from_json(filename: str) -> Network:
    """Load a network from a json file with "nodes", "arcs", "paths" and "trips".

    .. code-block:: json

        {"nodes": ["1", "2"],
         "arcs": [{"id": "a", "tail": "1", "head": "2", "alpha": 0.01, "beta": 1.0}],
         "paths": [{"id": "p", "od": ["1", "2"], "arcs": ["a"]}],
         "trips": [{"od": ["1", "2"], "q": 10.0}]}

    """
    with open(filename, 'r') as f:
        data = json.load(f)

    for field in ("nodes", "arcs", "paths", "trips"):
        assert field in data, "Network file '{}': missing field '{}'.".format(filename, field)

    arcs = [Arc(_field(item, "id", filename, "arcs"),
                _field(item, "tail", filename, "arcs"),
                _field(item, "head", filename, "arcs"),
                _number(item, "alpha", filename, "arcs"),
                _number(item, "beta", filename, "arcs")) for item in data["arcs"]]
    paths = [Path(_field(item, "id", filename, "paths"),
                  _od(item, filename, "paths"),
                  _field(item, "arcs", filename, "paths")) for item in data["paths"]]
    trips = TripTable({_od(item, filename, "trips"): _number(item, "q", filename, "trips") for item in data["trips"]})
    return Network([str(node) for node in data["nodes"]], arcs, paths, trips)


def _field(item, key, filename, section):
    assert key in item, "Network file '{}': missing field '{}.{}'.".format(filename, section, key)
    return item[key]


def _number(item, key, filename, section):
    value = _field(item, key, filename, section)
    assert isinstance(value, (int, float)) and not isinstance(value, bool), \
        "Network file '{}': field '{}.{}' should be a number.".format(filename, section, key)
    return float(value)


def _od(item, filename, section):
    od = _field(item, "od", filename, section)
    assert isinstance(od, list) and len(od) == 2, \
        "Network file '{}': field '{}.od' should be a pair of node ids.".format(filename, section)
    return str(od[0]), str(od[1])

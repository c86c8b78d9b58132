import json
import os
import tempfile
import pytest
import yaml
from ldmflow.cli import main
from ldmflow.cli import parse_args


def write_scenario(directory, beta=1.0):
    network = {"nodes": ["1", "2"],
               "arcs": [{"id": "a1", "tail": "1", "head": "2", "alpha": 0.01, "beta": beta},
                        {"id": "a2", "tail": "1", "head": "2", "alpha": 0.01, "beta": 1.0}],
               "paths": [{"id": "p1", "od": ["1", "2"], "arcs": ["a1"]},
                         {"id": "p2", "od": ["1", "2"], "arcs": ["a2"]}],
               "trips": [{"od": ["1", "2"], "q": 10.0}]}
    with open(os.path.join(directory, "network.json"), "w") as f:
        json.dump(network, f)
    scenario = {"network": "network.json",
                "horizon": {"t0": 0.0, "tf": 4.0},
                "penalty": {"target": 2.0, "early_coeff": 0.5, "late_coeff": 2.0},
                "departure_grid": {"n_points": 41}}
    filename = os.path.join(directory, "scenario.yaml")
    with open(filename, "w") as f:
        yaml.safe_dump(scenario, f)
    return filename


def test_parse_args():
    args = parse_args(["due", "--scenario", "scenario.yaml", "--seed", "3"])

    assert args.command == "due"
    assert args.scenario == "scenario.yaml"
    assert args.seed == 3
    assert args.out is None
    assert not args.verbose


def test_parse_args_requires_scenario():
    with pytest.raises(SystemExit):
        parse_args(["load"])


def test_main_load():
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "results")

        status = main(["load", "--scenario", write_scenario(d), "--out", out])

        assert status == 0
        assert sorted(os.listdir(out)) == ["arc_curves.csv", "delay_field.csv", "flows.json", "loading_summary.json",
                                           "monotonicity_audit.json", "od_minimum.csv", "path_delays.csv"]
        with open(os.path.join(out, "monotonicity_audit.json"), "r") as f:
            assert json.load(f)["passed"] is True


def test_main_invalid_network():
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "results")

        status = main(["load", "--scenario", write_scenario(d, beta=0.0), "--out", out])

        assert status == 1
        assert not os.path.exists(out)


def test_main_missing_scenario():
    with tempfile.TemporaryDirectory() as d:
        assert main(["due", "--scenario", os.path.join(d, "missing.yaml")]) == 1

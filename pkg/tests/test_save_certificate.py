import json
import os
import tempfile
import numpy
from ldmflow import EquilibriumCertificate
from ldmflow.exporting import save_certificate
from ldmflow.exporting import save_convergence_log


def make_certificate():
    trace = [{"iteration": 1, "gap": 0.5, "max_support_residual": 0.25, "step_length": 0.0},
             {"iteration": 2, "gap": 0.0, "max_support_residual": 0.0, "step_length": 0.125}]
    return EquilibriumCertificate(0.0, {("1", "2"): 1.075}, [0.5, 1.5], {"p": numpy.array([0.0, 0.5])},
                                  {"p": numpy.array([True, False])}, trace, True)


def test_save_certificate():
    with tempfile.TemporaryDirectory() as d:
        filename = os.path.join(d, "certificate.json")
        save_certificate(make_certificate(), filename)
        with open(filename, "r") as f:
            data = json.load(f)

    assert data["converged"] is True
    assert data["iterations"] == 2
    assert data["gap"] == 0.0
    assert data["od_minimum"] == [{"od": ["1", "2"], "v": 1.075}]
    assert data["support_residuals"] == {"p": [{"departure_time": 0.5, "residual": 0.0}]}


def test_save_convergence_log():
    with tempfile.TemporaryDirectory() as d:
        filename = os.path.join(d, "convergence_log.csv")
        save_convergence_log(make_certificate(), filename)
        with open(filename, "r") as f:
            lines = f.readlines()

    assert lines == ["iteration,gap,max_support_residual,step_length\n",
                     "1,0.5,0.25,0\n",
                     "2,0,0,0.125\n"]

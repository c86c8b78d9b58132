import json
import os
import tempfile
import numpy
from ldmflow import ConvergenceReport
from ldmflow.exporting import save_convergence_report


def test_save_convergence_report_with_truncated_term():
    rows = [{"n": 1, "input_l2": 0.5, "sup_D": 0.25, "sup_Psi": 0.25, "l2_Psi": 0.5, "sup_cumulative": 0.75,
             "clipped": False, "truncated": False},
            {"n": 2, "input_l2": 0.25, "sup_D": numpy.nan, "sup_Psi": numpy.nan, "l2_Psi": numpy.nan,
             "sup_cumulative": 0.375, "clipped": True, "truncated": True}]

    with tempfile.TemporaryDirectory() as d:
        save_convergence_report(ConvergenceReport(rows, 4.0), d)
        with open(os.path.join(d, "continuity_report.csv"), "r") as f:
            lines = f.readlines()
        with open(os.path.join(d, "continuity_plot_data.json"), "r") as f:
            data = json.load(f)

    assert lines == ["n,input_l2,sup_D,sup_Psi,l2_Psi,clipped,truncated\n",
                     "1,0.5,0.25,0.25,0.5,0,0\n",
                     "2,0.25,nan,nan,nan,1,1\n"]
    assert data["n"] == [1, 2]
    assert data["sup_Psi"] == [0.25, None]
    assert data["sup_cumulative"] == [0.75, 0.375]
    assert data["truncated"] == [False, True]
    assert data["duration"] == 4.0

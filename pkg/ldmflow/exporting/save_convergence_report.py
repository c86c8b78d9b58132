import csv
import json
import math
import os
from ..ConvergenceReport import COLUMNS
from ..ConvergenceReport import ConvergenceReport
from ..utils import format_number


def save_convergence_report(report: ConvergenceReport, directory: str):
    """Write ``continuity_report.csv`` and the same series, plus cumulative departure distances, as
    ``continuity_plot_data.json``. Distances of truncated terms are written as nan (csv) and null (json)."""
    with open(os.path.join(directory, "continuity_report.csv"), 'w', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in report.rows:
            writer.writerow([row["n"]] + [format_number(row[key]) for key in ("input_l2", "sup_D", "sup_Psi", "l2_Psi")]
                            + [int(row["clipped"]), int(row["truncated"])])

    keys = ("n", "input_l2", "sup_D", "sup_Psi", "l2_Psi", "sup_cumulative", "clipped", "truncated")
    data = {key: [_json_value(row[key]) for row in report.rows] for key in keys}
    data["duration"] = report.duration
    with open(os.path.join(directory, "continuity_plot_data.json"), 'w') as f:
        json.dump(data, f, indent=1)


def _json_value(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    return value

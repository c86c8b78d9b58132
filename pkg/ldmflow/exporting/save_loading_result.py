import csv
import os
from ..loading import path_delay
from ..LoadingResult import LoadingResult
from ..Network import Network
from ..utils import format_number


def save_loading_result(result: LoadingResult, network: Network, grid, directory: str):
    """Write the breakpoints of every arc's entry counts, exit counts and exit time function to
    ``arc_curves.csv``, and every path's delay on the departure grid to ``path_delays.csv``."""
    with open(os.path.join(directory, "arc_curves.csv"), 'w', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["arc_id", "curve", "time", "value"])
        for arc_id, state in result.items():
            for name, times, values in (("entry", state.entry.times, state.entry.values),
                                        ("exit", state.exit.times, state.exit.values),
                                        ("tau", state.tau.times, state.tau.values)):
                for t, value in zip(times, values):
                    writer.writerow([arc_id, name, format_number(t), format_number(value)])

    with open(os.path.join(directory, "path_delays.csv"), 'w', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["path_id", "departure_time", "delay"])
        for path_id in network.path_ids:
            delays = path_delay(result, network, path_id, grid)
            for t, delay in zip(grid, delays):
                writer.writerow([path_id, format_number(t), format_number(delay)])

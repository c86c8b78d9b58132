import csv
import os
from ..DelayField import DelayField
from ..utils import format_number


def save_delay_field(field: DelayField, directory: str):
    """Write delays and effective delays to ``delay_field.csv`` and the smallest effective delay per OD
    pair, with its refinement delta, to ``od_minimum.csv``."""
    with open(os.path.join(directory, "delay_field.csv"), 'w', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["path_id", "departure_time", "delay", "effective_delay"])
        for path_id in field.path_ids:
            for t, delay, effective in zip(field.grid, field.delays[path_id], field.effective[path_id]):
                writer.writerow([path_id, format_number(t), format_number(delay), format_number(effective)])

    with open(os.path.join(directory, "od_minimum.csv"), 'w', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["origin", "destination", "minimum_effective_delay", "refinement_delta"])
        for od, minimum in field.od_minimum.items():
            writer.writerow([od[0], od[1], format_number(minimum), format_number(field.refinement_delta.get(od, 0.0))])

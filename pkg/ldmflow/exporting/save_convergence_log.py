import csv
from ..EquilibriumCertificate import EquilibriumCertificate
from ..utils import format_number


def save_convergence_log(certificate: EquilibriumCertificate, filename: str):
    """One csv row per solver iteration: iteration, gap, max_support_residual, step_length."""
    with open(filename, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["iteration", "gap", "max_support_residual", "step_length"])
        for record in certificate.trace:
            writer.writerow([record["iteration"], format_number(record["gap"]),
                             format_number(record["max_support_residual"]), format_number(record["step_length"])])

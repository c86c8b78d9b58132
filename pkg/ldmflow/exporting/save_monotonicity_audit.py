import json
from ..typing import ReportType


def save_monotonicity_audit(report: ReportType, filename: str):
    with open(filename, 'w') as f:
        json.dump({"passed": not report, "violations": list(report)}, f, indent=1)

import json
from ..PathFlowVector import PathFlowVector


def save_flows_as_json(h: PathFlowVector, filename: str):
    """Save path flows as json, readable by :func:`ldmflow.importing.load_flows_from_json`.

    Args:
    ----
    h: PathFlowVector
        Path flows to save.
    filename: str
        Provide filename to save path flows.
    """
    data = {"flows": [{"path": path_id,
                       "breakpoints": [float(t) for t in flow.breakpoints],
                       "rates": [float(r) for r in flow.rates]} for path_id, flow in h.items()]}
    with open(filename, 'w') as f:
        json.dump(data, f, indent=1)

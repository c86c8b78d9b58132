import json
from ..PathFlow import PathFlow
from ..PathFlowVector import PathFlowVector


def load_flows_from_json(filename: str) -> PathFlowVector:
    """Load path flows saved by :func:`ldmflow.exporting.save_flows_as_json`."""
    with open(filename, 'r') as f:
        data = json.load(f)

    assert "flows" in data, "Flow file '{}': missing field 'flows'.".format(filename)
    flows = {}
    for item in data["flows"]:
        for key in ("path", "breakpoints", "rates"):
            assert key in item, "Flow file '{}': missing field 'flows.{}'.".format(filename, key)
        assert len(item["rates"]) == len(item["breakpoints"]) - 1, \
            "Flow file '{}': path '{}' should have one rate less than breakpoints.".format(filename, item["path"])
        flows[item["path"]] = PathFlow(item["breakpoints"], item["rates"])
    return PathFlowVector(flows)

from typing import Dict
from .PathFlow import PathFlow
from .typing import RatesType


class PathFlowVector:
    """Departure rates of every path, keyed by path id."""

    def __init__(self, flows: Dict[str, PathFlow]):
        assert isinstance(flows, dict), "Expected input argument 'flows' to be a dict."
        assert all(isinstance(flow, PathFlow) for flow in flows.values()), \
            "Expected every path flow to be a PathFlow."
        self._flows = dict(flows)

    def __getitem__(self, path_id: str) -> PathFlow:
        assert path_id in self._flows, "Unknown path id '{}'.".format(path_id)
        return self._flows[path_id]

    def __contains__(self, path_id):
        return path_id in self._flows

    def __iter__(self):
        return iter(self._flows)

    def __len__(self):
        return len(self._flows)

    def __eq__(self, other):
        return set(self._flows) == set(other.path_ids) and \
            all(self._flows[path_id] == other[path_id] for path_id in self._flows)

    def __add__(self, other: "PathFlowVector") -> "PathFlowVector":
        assert set(self._flows) == set(other.path_ids), "Path flow vectors cover different paths."
        return PathFlowVector({path_id: flow + other[path_id] for path_id, flow in self._flows.items()})

    @classmethod
    def from_slot_rates(cls, grid, rates: RatesType) -> "PathFlowVector":
        return cls({path_id: PathFlow(grid, values) for path_id, values in rates.items()})

    @property
    def path_ids(self):
        return list(self._flows)

    def items(self):
        return self._flows.items()

    def volumes(self) -> Dict[str, float]:
        return {path_id: flow.volume for path_id, flow in self._flows.items()}

    def od_volumes(self, path_od: Dict[str, tuple]) -> Dict[tuple, float]:
        """Departed volume per OD pair, given the OD of every path."""
        totals = {}
        for path_id, flow in self._flows.items():
            od = path_od[path_id]
            totals[od] = totals.get(od, 0.0) + flow.volume
        return totals

    def slot_rates(self, grid) -> RatesType:
        return {path_id: flow.slot_rates(grid) for path_id, flow in self._flows.items()}

    def scale(self, factor: float) -> "PathFlowVector":
        return PathFlowVector({path_id: flow.scale(factor) for path_id, flow in self._flows.items()})

    def sup_norm(self) -> float:
        return max((flow.sup_norm for flow in self._flows.values()), default=0.0)

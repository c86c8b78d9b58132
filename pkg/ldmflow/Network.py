from typing import Dict
from typing import List
from typing import Sequence
from typing import Set
from .Arc import Arc
from .Path import Path
from .TripTable import TripTable


class Network:
    """Directed graph of affine-delay arcs with enumerated paths and a fixed trip table.

    The network is not modified after construction. Structural consistency is not enforced here,
    use :func:`ldmflow.validation.validate_network` to obtain a list of violations.

    For example

    .. code-block:: python

        from ldmflow import Arc, Network, Path, TripTable

        net = Network(nodes=["1", "2"],
                      arcs=[Arc("a", "1", "2", alpha=0.01, beta=1.0)],
                      paths=[Path("p", ("1", "2"), ["a"])],
                      trips=TripTable({("1", "2"): 10.0}))
        print(net.incidence("a", "p"))

    Should output

    .. code-block:: console

        1

    """
    def __init__(self, nodes: Sequence[str], arcs: Sequence[Arc], paths: Sequence[Path], trips: TripTable):
        assert isinstance(trips, TripTable), "Expected input argument 'trips' to be a TripTable."
        self._nodes = list(nodes)
        self._arcs = list(arcs)
        self._paths = list(paths)
        self.trips = trips
        self._arc_index = {}
        for arc in self._arcs:
            self._arc_index.setdefault(arc.id, arc)
        self._path_index = {}
        for path in self._paths:
            self._path_index.setdefault(path.id, path)

    def __eq__(self, other):
        return \
            self._nodes == other.nodes and \
            self._arcs == other.arcs and \
            self._paths == other.paths and \
            self.trips == other.trips

    @property
    def nodes(self) -> List[str]:
        return list(self._nodes)

    @property
    def arcs(self) -> List[Arc]:
        return list(self._arcs)

    @property
    def paths(self) -> List[Path]:
        return list(self._paths)

    @property
    def arc_ids(self) -> List[str]:
        return list(self._arc_index)

    @property
    def path_ids(self) -> List[str]:
        return list(self._path_index)

    def has_arc(self, arc_id: str) -> bool:
        return arc_id in self._arc_index

    def arc(self, arc_id: str) -> Arc:
        assert arc_id in self._arc_index, "Unknown arc id '{}'.".format(arc_id)
        return self._arc_index[arc_id]

    def path(self, path_id: str) -> Path:
        assert path_id in self._path_index, "Unknown path id '{}'.".format(path_id)
        return self._path_index[path_id]

    def incidence(self, arc_id: str, path_id: str) -> int:
        """1 if arc 'arc_id' belongs to path 'path_id', else 0."""
        self.arc(arc_id)
        return int(arc_id in self.path(path_id).arcs)

    def upstream_arcs(self, arc_id: str) -> Set[str]:
        """Arcs immediately preceding 'arc_id' on at least one path."""
        self.arc(arc_id)
        return {upstream for path in self._path_index.values()
                for upstream, downstream in path.consecutive_pairs() if downstream == arc_id}

    def commodities(self, arc_id: str) -> List[str]:
        """Ids of the paths that traverse 'arc_id', in path order."""
        self.arc(arc_id)
        return [path.id for path in self._path_index.values() if arc_id in path.arcs]

    def paths_by_od(self) -> Dict[tuple, List[str]]:
        grouped = {}
        for path in self._path_index.values():
            grouped.setdefault(path.od, []).append(path.id)
        return grouped

    def path_od(self) -> Dict[str, tuple]:
        return {path.id: path.od for path in self._path_index.values()}

    def free_flow_time(self, path_id: str) -> float:
        return sum(self.arc(arc_id).beta for arc_id in self.path(path_id).arcs)

    def total_beta(self) -> float:
        return sum(arc.beta for arc in self._arc_index.values())

    def min_beta(self) -> float:
        return min(arc.beta for arc in self._arc_index.values())

from typing import Sequence
from typing import Tuple


class Path:
    """Ordered sequence of arcs serving one origin-destination pair."""

    def __init__(self, id: str, od: Tuple[str, str], arcs: Sequence[str]):
        # pylint: disable=redefined-builtin
        self.id = id
        self.od = (od[0], od[1])
        self.arcs = tuple(arcs)

    def __eq__(self, other):
        return self.id == other.id and self.od == other.od and self.arcs == other.arcs

    def __len__(self):
        return len(self.arcs)

    def __repr__(self):
        return "Path({0!r}, od={1!r}, arcs={2!r})".format(self.id, self.od, list(self.arcs))

    @property
    def origin(self):
        return self.od[0]

    @property
    def destination(self):
        return self.od[1]

    @property
    def first_arc(self):
        return self.arcs[0] if self.arcs else None

    def consecutive_pairs(self):
        """(upstream, downstream) arc id pairs along the path."""
        return list(zip(self.arcs[:-1], self.arcs[1:]))

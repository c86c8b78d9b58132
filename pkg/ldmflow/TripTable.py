from typing import Dict
from .typing import ODPair


class TripTable:
    """Fixed demand volumes Q_ij, in vehicles, per origin-destination pair."""

    def __init__(self, entries: Dict[ODPair, float]):
        assert isinstance(entries, dict), "Expected input argument 'entries' to be a dict."
        self._entries = {(od[0], od[1]): float(q) for od, q in entries.items()}

    def __eq__(self, other):
        return self._entries == other._entries

    def __getitem__(self, od: ODPair) -> float:
        assert od in self._entries, "Unknown OD pair {0!r}.".format(od)
        return self._entries[od]

    def __contains__(self, od):
        return od in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def items(self):
        return self._entries.items()

    @property
    def od_pairs(self):
        return list(self._entries)

    @property
    def total(self):
        return sum(self._entries.values())

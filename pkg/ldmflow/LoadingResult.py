from typing import Dict
from .ArcState import ArcState
from .TimeHorizon import TimeHorizon


class LoadingResult:
    """Outcome of a network loading: one ArcState per arc.

    Args:
    ----
    states:
        Arc id to loaded state.
    horizon:
        Horizon the flows were loaded on, with the slack that was finally used.
    end:
        Time by which every vehicle had left the network, or ``horizon.end`` when loading was truncated.
    truncated:
        True if some volume was still on the network at ``horizon.end``.
    residual:
        Arc id to volume still on the arc at ``end``; only arcs holding volume are listed.
    """
    def __init__(self, states: Dict[str, ArcState], horizon: TimeHorizon, end: float,
                 truncated: bool = False, residual: Dict[str, float] = None):
        # pylint: disable=too-many-arguments
        self._states = dict(states)
        self.horizon = horizon
        self.end = float(end)
        self.truncated = bool(truncated)
        self.residual = dict(residual or {})

    def __getitem__(self, arc_id: str) -> ArcState:
        assert arc_id in self._states, "Unknown arc id '{}'.".format(arc_id)
        return self._states[arc_id]

    def __contains__(self, arc_id):
        return arc_id in self._states

    def __iter__(self):
        return iter(self._states)

    def __len__(self):
        return len(self._states)

    @property
    def arc_ids(self):
        return list(self._states)

    def items(self):
        return self._states.items()

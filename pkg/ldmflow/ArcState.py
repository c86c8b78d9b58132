from typing import Dict
from typing import Optional
import numpy
from .CumulativeCurve import CumulativeCurve
from .ExitTimeFunction import ExitTimeFunction
from .utils import merge_grids


class ArcState:
    """Loaded state of one arc: aggregate entry and exit counts, exit time function and the
    per-path (commodity) entry and exit counts."""

    def __init__(self, arc: str, entry: CumulativeCurve, exit: CumulativeCurve, tau: ExitTimeFunction,
                 commodity_entry: Optional[Dict[str, CumulativeCurve]] = None,
                 commodity_exit: Optional[Dict[str, CumulativeCurve]] = None):
        # pylint: disable=redefined-builtin,too-many-arguments
        self.arc = arc
        self.entry = entry
        self.exit = exit
        self.tau = tau
        self.commodity_entry = dict(commodity_entry or {})
        self.commodity_exit = dict(commodity_exit or {})

    def __repr__(self):
        return "ArcState({0!r}, entered={1}, exited={2})".format(self.arc, self.entry.total, self.exit.total)

    def clone(self):
        return ArcState(self.arc, self.entry, self.exit, self.tau, self.commodity_entry, self.commodity_exit)

    def grid(self) -> numpy.ndarray:
        """All breakpoints of the entry and exit curves."""
        return merge_grids(self.entry.times, self.exit.times)

    def volume(self, t):
        """Vehicles on the arc at time t."""
        return self.entry(t) - self.exit(t)

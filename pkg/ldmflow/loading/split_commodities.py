import numpy
from ..ArcState import ArcState
from ..constants import COMMODITY_TOLERANCE
from ..CumulativeCurve import CumulativeCurve
from ..utils import merge_grids


def split_commodities(state: ArcState) -> ArcState:
    """Fill the exit counts of every path on an arc from its entry counts.

    Vehicles do not overtake on an arc, so every path shares the arc's exit time function and

    .. code-block:: none

        V_p(s) = U_p(tau^-1(s))

    The returned state is a copy; 'state' is not modified.
    """
    if state.commodity_entry:
        grid = merge_grids(state.entry.times, *[curve.times for curve in state.commodity_entry.values()])
        summed = numpy.sum([curve(grid) for curve in state.commodity_entry.values()], axis=0)
        tolerance = COMMODITY_TOLERANCE * max(1.0, state.entry.total)
        assert numpy.all(numpy.abs(summed - state.entry(grid)) <= tolerance), \
            "Commodity entry counts do not sum to the arc entry counts."
    else:
        assert state.entry.total == 0, "Commodity entry counts do not sum to the arc entry counts."

    lo = state.tau.times[0]
    hi = max(state.exit.end, lo + state.tau.beta)
    updated = state.clone()
    updated.commodity_exit = {path_id: _exits(state, curve, lo, hi)
                              for path_id, curve in state.commodity_entry.items()}
    return updated


def _exits(state: ArcState, entry: CumulativeCurve, lo: float, hi: float) -> CumulativeCurve:
    return state.tau.compose_inverse(entry, lo, hi)

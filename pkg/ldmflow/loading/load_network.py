import logging
from typing import Dict
from typing import List
import numpy
from ..ArcState import ArcState
from ..CumulativeCurve import CumulativeCurve
from ..flows import cumulate
from ..LoadingResult import LoadingResult
from ..Network import Network
from ..PathFlow import PathFlow
from ..PathFlowVector import PathFlowVector
from ..TimeHorizon import TimeHorizon
from ..constants import TIME_TOLERANCE
from ..utils import as_nondecreasing
from ..utils import merge_grids
from .ArcLoader import ArcLoader
from .slack_schedule import slack_schedule


logger = logging.getLogger(__name__)


class _Commodity:
    """Growing entry and exit counts of one path on one arc."""

    def __init__(self, t0: float):
        self.entry_t = [t0]
        self.entry_v = [0.0]
        self.exit_t = [t0]
        self.exit_v = [0.0]

    @staticmethod
    def _append(times: List[float], values: List[float], new_times, new_values):
        for t, v in zip(new_times, new_values):
            if t > times[-1] + TIME_TOLERANCE:
                times.append(float(t))
                values.append(max(float(v), values[-1]))

    def add_entry(self, times, values):
        self._append(self.entry_t, self.entry_v, times, values)

    def add_exit(self, times, values):
        self._append(self.exit_t, self.exit_v, times, values)

    def entry_curve(self) -> CumulativeCurve:
        return CumulativeCurve(self.entry_t, self.entry_v)

    def exit_curve(self) -> CumulativeCurve:
        return CumulativeCurve(self.exit_t, as_nondecreasing(self.exit_v))


def _window_piece(curve: CumulativeCurve, lo: float, hi: float):
    times = curve.times
    grid = merge_grids([lo], times[(times > lo) & (times < hi)], [hi])
    return grid, curve(grid)


def load_network(network: Network, h: PathFlowVector, horizon: TimeHorizon) -> LoadingResult:
    """Load path departure rates h onto the network.

    Loading proceeds in windows of half the smallest free-flow delay. Within a window, the exits of
    every arc depend only on entries of earlier windows, so each window is done in three passes:
    commodity exits from the state so far, commodity entries (departures on a path's first arc,
    exits of the upstream arc otherwise), then extension of every arc's aggregate entry counts.

    Loading stops once tf is passed and all arcs are empty. Volume still on the network at the end of
    the last slack extension marks the result as truncated.

    Args:
    ----
    network:
        Network to load; every path in h must belong to it.
    h:
        Departure rates per path. Paths of the network missing from h carry no flow.
    horizon:
        Planning horizon; see :func:`slack_schedule` for the loading end.
    """
    for path_id in h.path_ids:
        network.path(path_id)

    t0 = horizon.t0
    width = network.min_beta() / 2
    loaders = {arc.id: ArcLoader(arc, t0) for arc in network.arcs}
    for loader in loaders.values():
        loader.advance(t0)
    commodities = {arc_id: {path_id: _Commodity(t0) for path_id in network.commodities(arc_id)}
                   for arc_id in loaders}
    departures = {path_id: cumulate(h[path_id] if path_id in h else PathFlow.zero(t0, horizon.tf), horizon)
                  for path_id in network.path_ids}

    ends = slack_schedule(horizon, network.total_beta())
    lo = t0
    finished = False
    for i, end in enumerate(ends):
        while lo < end - TIME_TOLERANCE and not finished:
            hi = min(lo + width, end)
            _load_window(network, loaders, commodities, departures, lo, hi)
            lo = hi
            finished = hi >= horizon.tf and all(loader.is_drained() for loader in loaders.values())
        if finished:
            break
        if i + 1 < len(ends):
            logger.warning("Network still holds vehicles at t=%s, extending loading to t=%s.", end, ends[i + 1])

    residual = {} if finished else {arc_id: loader.volume for arc_id, loader in loaders.items()
                                    if not loader.is_drained()}
    if not finished:
        logger.warning("Loading truncated at t=%s with vehicles left on arcs %s.", lo, sorted(residual))

    states = {}
    for arc_id, loader in loaders.items():
        states[arc_id] = ArcState(
            arc=arc_id,
            entry=loader.entry_curve(),
            exit=loader.exit_curve(),
            tau=loader.exit_time_function(drained=finished),
            commodity_entry={path_id: commodity.entry_curve() for path_id, commodity in commodities[arc_id].items()},
            commodity_exit={path_id: commodity.exit_curve() for path_id, commodity in commodities[arc_id].items()})
    return LoadingResult(states, horizon.with_slack(lo - horizon.tf), end=lo, truncated=not finished,
                         residual=residual)


def _load_window(network: Network, loaders: Dict[str, ArcLoader], commodities, departures, lo, hi):
    # pylint: disable=too-many-arguments,too-many-locals
    exits = {}
    for arc_id, loader in loaders.items():
        for path_id, commodity in commodities[arc_id].items():
            piece = loader.exit_piece(commodity.entry_t, commodity.entry_v, lo, hi)
            commodity.add_exit(*piece)
            exits[(arc_id, path_id)] = piece

    for path in network.paths:
        upstream = None
        for arc_id in path.arcs:
            if upstream is None:
                piece = _window_piece(departures[path.id], lo, hi)
            else:
                piece = exits[(upstream, path.id)]
            commodities[arc_id][path.id].add_entry(*piece)
            upstream = arc_id

    for arc_id, loader in loaders.items():
        entries = [(numpy.asarray(commodity.entry_t), numpy.asarray(commodity.entry_v))
                   for commodity in commodities[arc_id].values()]
        grid = merge_grids([lo], *[times[(times > lo) & (times < hi)] for times, _ in entries], [hi])
        values = numpy.zeros_like(grid)
        for times, counts in entries:
            values += numpy.interp(grid, times, counts)
        loader.extend_entry(grid, as_nondecreasing(values))
        loader.advance(hi)

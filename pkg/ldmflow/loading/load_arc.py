import logging
from typing import Tuple
from ..Arc import Arc
from ..CumulativeCurve import CumulativeCurve
from ..ExitTimeFunction import ExitTimeFunction
from ..TimeHorizon import TimeHorizon
from .ArcLoader import ArcLoader
from .slack_schedule import slack_schedule


logger = logging.getLogger(__name__)


def load_arc(arc: Arc, entry: CumulativeCurve, horizon: TimeHorizon) -> Tuple[ExitTimeFunction, CumulativeCurve]:
    """Exit time function and exit counts of a single arc fed with the given entry counts.

    Args:
    ----
    arc:
        Arc with delay ``alpha * X + beta``.
    entry:
        Cumulative entry counts, starting at 0 vehicles.
    horizon:
        Loading starts at ``horizon.t0``; see :func:`slack_schedule` for where it ends.
    """
    assert entry.values[0] == 0, "Expected the entry curve to start at 0 vehicles."
    assert entry.start >= horizon.t0, "Expected the entry curve to start within the horizon."

    loader = ArcLoader(arc, horizon.t0)
    loader.extend_entry(entry.times, entry.values)

    ends = slack_schedule(horizon, arc.beta)
    for i, end in enumerate(ends):
        loader.advance(end)
        if loader.is_drained() and loader.last_time >= entry.end:
            return loader.exit_time_function(drained=True), loader.exit_curve()
        if i + 1 < len(ends):
            logger.warning("Arc '%s' still holds %s vehicles at t=%s, extending loading to t=%s.",
                           arc.id, loader.volume, end, ends[i + 1])

    logger.warning("Arc '%s' still holds %s vehicles at the end of loading.", arc.id, loader.volume)
    return loader.exit_time_function(drained=False), loader.exit_curve()

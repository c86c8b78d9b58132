import bisect
import heapq
import logging
from typing import Sequence
from ..Arc import Arc
from ..constants import DRAIN_TOLERANCE
from ..constants import KINK_TOLERANCE
from ..constants import TIME_TOLERANCE
from ..CumulativeCurve import CumulativeCurve
from ..ExitTimeFunction import ExitTimeFunction
from ..utils import as_nondecreasing
from ..utils import interpolate
from ..utils import merge_grids
from ..utils import normalize_breakpoints


logger = logging.getLogger(__name__)


class ArcLoader:
    """Incremental, exact loader of a single arc with delay alpha * X + beta.

    Entry counts are appended with :meth:`extend_entry` and the exit time function is then computed
    forward in time with :meth:`advance`. Every processed time t (an event) gets

    .. code-block:: none

        V(t)   = U(tau^-1(t))          vehicles that entered before tau^-1(t) have left
        X(t)   = U(t) - V(t)
        tau(t) = t + beta + alpha * X(t)

    Since beta > 0, tau^-1(t) < t, so only already processed events are needed. Events are the entry
    breakpoints and the exit times tau(b) of every event b where the exit curve changes slope. Between
    two events U, V and tau are all linear, which makes the result exact up to rounding.

    Entry counts must only be extended beyond the last processed time.
    """
    def __init__(self, arc: Arc, t0: float):
        assert arc.alpha >= 0, "Expected 'alpha' to be nonnegative."
        assert arc.beta > 0, "Expected 'beta' to be strictly positive."
        self.arc = arc
        self.t0 = float(t0)
        self._entry_t = [self.t0]
        self._entry_v = [0.0]
        self._tau_t = []
        self._tau_v = []
        self._exit_v = []
        self._event_entry = []
        self._pending = []

    @property
    def last_time(self) -> float:
        """Latest processed time, or t0 when nothing was processed yet."""
        return self._tau_t[-1] if self._tau_t else self.t0

    @property
    def entered(self) -> float:
        return self._entry_v[-1]

    @property
    def volume(self) -> float:
        """Vehicles on the arc at the latest processed time."""
        if not self._tau_t:
            return 0.0
        return self._event_entry[-1] - self._exit_v[-1]

    def is_drained(self) -> bool:
        return self.volume <= DRAIN_TOLERANCE * max(1.0, self.entered)

    def extend_entry(self, times: Sequence[float], values: Sequence[float]):
        """Append entry breakpoints later than the current last one."""
        for t, v in zip(times, values):
            t = float(t)
            if t <= self._entry_t[-1] + TIME_TOLERANCE:
                continue
            assert not self._tau_t or t > self._tau_t[-1], "Entry counts extended before an already loaded time."
            self._entry_t.append(t)
            self._entry_v.append(max(float(v), self._entry_v[-1]))
            heapq.heappush(self._pending, t)

    def advance(self, until: float):
        """Process every event up to and including 'until'."""
        if not self._tau_t:
            self._process(self.t0)
        while True:
            last = self._tau_t[-1]
            while self._pending and self._pending[0] <= last + TIME_TOLERANCE:
                heapq.heappop(self._pending)
            upcoming = min(until, self._tau_v[-1])
            if self._pending:
                upcoming = min(upcoming, self._pending[0])
            if upcoming <= last + TIME_TOLERANCE:
                return
            self._process(upcoming)

    def _entry_at(self, t):
        return interpolate(self._entry_t, self._entry_v, t)

    def _inverse(self, s):
        if s <= self._tau_v[0]:
            return self._tau_t[0] + (s - self._tau_v[0])
        return interpolate(self._tau_v, self._tau_t, s)

    def _tau(self, t):
        if t <= self._tau_t[0]:
            return self._tau_v[0] + (t - self._tau_t[0])
        return interpolate(self._tau_t, self._tau_v, t)

    def _process(self, t):
        entered = self._entry_at(t)
        if not self._tau_t or t <= self._tau_v[0]:
            exited = 0.0
        else:
            exited = self._entry_at(interpolate(self._tau_v, self._tau_t, t))
        if self._exit_v:
            exited = max(exited, self._exit_v[-1])
        exited = min(exited, entered)
        volume = max(entered - exited, 0.0)
        self._tau_t.append(t)
        self._tau_v.append((t + self.arc.beta) + self.arc.alpha * volume)
        self._exit_v.append(exited)
        self._event_entry.append(entered)
        if len(self._tau_t) >= 2:
            self._check_kink(len(self._tau_t) - 2)

    def _ratio(self, i):
        # slope of the exit curve between the exit times of events i and i + 1
        return (self._event_entry[i + 1] - self._event_entry[i]) / (self._tau_v[i + 1] - self._tau_v[i])

    def _check_kink(self, i):
        left = 0.0 if i == 0 else self._ratio(i - 1)
        right = self._ratio(i)
        if abs(right - left) > KINK_TOLERANCE * (1.0 + abs(left) + abs(right)):
            heapq.heappush(self._pending, self._tau_v[i])

    def exit_piece(self, entry_times, entry_values, lo: float, hi: float):
        """Exit counts on [lo, hi] of a share of the traffic with the given entry counts.

        The share leaves in the order it entered, so its exits are ``entry(tau^-1(s))``. The exit time
        function must already be known on the entry times mapped into the window.

        Returns
        -------
        Tuple of numpy arrays (times, values) on a grid starting at lo and ending at hi.
        """
        assert hi <= self._tau_v[-1] + TIME_TOLERANCE, "Exit counts requested beyond the loaded exit times."
        entry_lo = self._inverse(lo)
        entry_hi = self._inverse(hi)
        own = self._tau_v[bisect.bisect_right(self._tau_v, lo):bisect.bisect_left(self._tau_v, hi)]
        first = bisect.bisect_right(entry_times, entry_lo)
        last = bisect.bisect_left(entry_times, entry_hi)
        images = [self._tau(b) for b in entry_times[first:last]]
        images = [s for s in images if lo < s < hi]
        grid = merge_grids([lo], own, images, [hi])
        values = [interpolate(entry_times, entry_values, self._inverse(s)) for s in grid]
        return grid, as_nondecreasing(values)

    def exit_time_function(self, drained: bool = False) -> ExitTimeFunction:
        times, values = normalize_breakpoints(self._tau_t, self._tau_v)
        return ExitTimeFunction(times, values, self.arc.beta, drained=drained)

    def entry_curve(self) -> CumulativeCurve:
        return CumulativeCurve(self._entry_t, self._entry_v)

    def exit_curve(self) -> CumulativeCurve:
        return CumulativeCurve(self._tau_t, as_nondecreasing(self._exit_v))

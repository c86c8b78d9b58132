import numpy
from ..Arc import Arc
from ..CumulativeCurve import CumulativeCurve
from ..ExitTimeFunction import ExitTimeFunction
from ..TimeHorizon import TimeHorizon
from ..constants import DRAIN_TOLERANCE
from .slack_schedule import slack_schedule


def load_arc_fixed_step(arc: Arc, entry: CumulativeCurve, horizon: TimeHorizon, dt: float) -> ExitTimeFunction:
    """Naive time-stepping loader of a single arc, first order in dt.

    Vehicles entering during step k travel as one packet. Its exit time is the mean of the exit times
    at both step ends, and it counts as exited from the first grid time at or after that exit time.
    The exit time function is sampled on the step grid.
    """
    assert 0 < dt < arc.beta, "Expected 'dt' to be positive and smaller than the arc's beta."
    end = slack_schedule(horizon, arc.beta)[0]
    steps = int(numpy.ceil((end - horizon.t0) / dt))
    times = horizon.t0 + dt * numpy.arange(steps + 1)
    entered = entry(times)
    packets = numpy.diff(entered)

    tau = numpy.empty_like(times)
    packet_exit = numpy.empty_like(packets)
    exited = 0.0
    first_waiting = 0
    for k, t in enumerate(times):
        # packet k - 1 exits after t since dt < beta
        while first_waiting < k - 1 and packet_exit[first_waiting] <= t:
            exited += packets[first_waiting]
            first_waiting += 1
        volume = max(entered[k] - exited, 0.0)
        tau[k] = (t + arc.beta) + arc.alpha * volume
        if k > 0:
            packet_exit[k - 1] = (tau[k - 1] + tau[k]) / 2

    drained = entered[-1] - exited <= DRAIN_TOLERANCE * max(1.0, entered[-1])
    return ExitTimeFunction(times, tau, arc.beta, drained=drained)

import numpy
from ..CumulativeCurve import CumulativeCurve
from ..PathFlow import PathFlow
from ..TimeHorizon import TimeHorizon


def cumulate(h_p: PathFlow, horizon: TimeHorizon) -> CumulativeCurve:
    """Cumulative departures H_p(t), the integral of h_p from t0 to t.

    The part of h_p outside the planning horizon is ignored. The slope of the returned curve equals
    the departure rate on every piece.
    """
    t0, tf = horizon.t0, horizon.tf
    breakpoints = h_p.breakpoints
    if breakpoints[-1] <= t0 or breakpoints[0] >= tf:
        h_p = PathFlow.zero(t0, tf)
    elif breakpoints[0] < t0 or breakpoints[-1] > tf:
        h_p = h_p.restrict(max(breakpoints[0], t0), min(breakpoints[-1], tf))

    breakpoints = h_p.breakpoints
    volumes = numpy.concatenate([[0.0], numpy.cumsum(h_p.rates * h_p.widths)])
    if breakpoints[0] > t0:
        breakpoints = numpy.concatenate([[t0], breakpoints])
        volumes = numpy.concatenate([[0.0], volumes])
    return CumulativeCurve(breakpoints, volumes)

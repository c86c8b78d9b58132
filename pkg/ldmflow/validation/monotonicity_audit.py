import numpy
from ..LoadingResult import LoadingResult
from ..typing import ReportType


def monotonicity_audit(result: LoadingResult) -> ReportType:
    """Check every exit time function is strictly increasing and never below t + beta.

    The checks are exact at the breakpoints; between breakpoints they follow by linearity.
    """
    report = []
    for arc_id, state in result.items():
        times = state.tau.times
        values = state.tau.values
        for i in numpy.flatnonzero(numpy.diff(values) <= 0):
            report.append("Arc '{}': exit time does not increase between t={} and t={}.".format(
                arc_id, times[i], times[i + 1]))
        for i in numpy.flatnonzero(values < times + state.tau.beta):
            report.append("Arc '{}': exit time {} below free-flow exit time {} at t={}.".format(
                arc_id, values[i], times[i] + state.tau.beta, times[i]))
    return report

import numpy
from ..constants import FEASIBILITY_TOLERANCE
from ..Network import Network
from ..PathFlowVector import PathFlowVector
from ..typing import ReportType


def check_feasibility(h: PathFlowVector, network: Network, tol: float = FEASIBILITY_TOLERANCE) -> ReportType:
    """List the reasons why h is not a feasible path flow vector for the network's trip table.

    h is feasible when all its rates are nonnegative and every OD pair departs its demand, up to a
    relative tolerance. Paths of the network missing from h carry no flow.
    """
    report = []
    path_od = network.path_od()
    for path_id, flow in h.items():
        if path_id not in path_od:
            report.append("Path flows given for unknown path '{}'.".format(path_id))
        elif numpy.any(flow.rates < 0):
            report.append("Path '{}': negative departure rate {}.".format(path_id, float(numpy.min(flow.rates))))

    volumes = PathFlowVector({path_id: flow for path_id, flow in h.items() if path_id in path_od}).od_volumes(path_od)
    for od, demand in network.trips.items():
        volume = volumes.get(od, 0.0)
        if abs(volume - demand) > tol * demand:
            report.append("OD {}: departed volume {} differs from demand {} by {}.".format(
                od, volume, demand, abs(volume - demand)))
    return report

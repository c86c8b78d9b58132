import numpy
from ..DelayField import DelayField
from ..Network import Network
from ..PathFlowVector import PathFlowVector
from ..validation import check_feasibility


def gap(h: PathFlowVector, field: DelayField, network: Network = None) -> float:
    """Equilibrium gap of h: sum over paths of the integral of (Psi_p - v) * h_p.

    The integral is a quadrature over the field's departure grid with the field's weights. The gap is
    zero exactly when every departure time carrying flow attains the smallest effective delay of its
    OD pair.

    Args:
    ----
    h:
        Path flows the field was computed from.
    field:
        Delays of h.
    network:
        When given, h must be feasible for its trip table.
    """
    if network is not None:
        report = check_feasibility(h, network)
        assert not report, "Path flows are infeasible: " + "; ".join(report)
    total = 0.0
    for path_id in h.path_ids:
        rates = numpy.asarray(h[path_id](field.grid), dtype="float").reshape(-1)
        total += float(numpy.sum(field.residuals(path_id) * rates * field.weights))
    return max(total, 0.0)

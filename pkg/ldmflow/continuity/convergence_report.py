import logging
import numpy
from ..ConvergenceReport import ConvergenceReport
from ..delays import delay_field
from ..exceptions import HorizonExhaustedError
from ..flows import cumulate
from ..flows import l2_distance
from ..flows import sup_distance
from ..loading import load_network
from ..Network import Network
from ..PenaltyParams import PenaltyParams
from ..SequenceSpec import SequenceSpec
from .make_sequence import sequence_base
from .make_sequence import sequence_term


logger = logging.getLogger(__name__)


def convergence_report(network: Network, params: PenaltyParams, spec: SequenceSpec, grid) -> ConvergenceReport:
    """Load the base and every term of a sequence and measure how far their delays are apart.

    Per term n the report holds the L2 distance of the flows to the base, the largest distance of the
    path delays and of the effective delays over the departure grid (maximum over paths), the largest
    per-path L2 distance of effective delays (trapezoid rule on the grid) and the largest distance of
    cumulative departures. Terms that cannot be loaded within the loading horizon are flagged as
    truncated.
    """
    horizon = spec.horizon
    base = sequence_base(spec)
    base_result = load_network(network, base, horizon)
    assert not base_result.truncated, "Base path flows could not be loaded within the loading horizon."
    base_field = delay_field(base_result, network, params, grid)
    base_departures = {path_id: cumulate(flow, horizon) for path_id, flow in base.items()}

    rows = []
    for n in range(1, spec.length + 1):
        term, clipped = sequence_term(spec, n)
        row = {"n": n, "input_l2": l2_distance(term, base), "clipped": clipped, "truncated": False,
               "sup_cumulative": _sup_cumulative(term, base_departures, horizon)}
        try:
            result = load_network(network, term, horizon)
            if result.truncated:
                raise HorizonExhaustedError("Term {} could not be loaded within the loading horizon.".format(n))
            field = delay_field(result, network, params, grid)
        except HorizonExhaustedError as error:
            logger.warning("Sequence term %d left out: %s", n, error)
            row.update({"truncated": True, "sup_D": numpy.nan, "sup_Psi": numpy.nan, "l2_Psi": numpy.nan,
                        "sup_D_by_path": {}, "sup_Psi_by_path": {}})
            rows.append(row)
            continue

        sup_d = {path_id: sup_distance(field.delays[path_id], base_field.delays[path_id])
                 for path_id in network.path_ids}
        sup_psi = {path_id: sup_distance(field.effective[path_id], base_field.effective[path_id])
                   for path_id in network.path_ids}
        l2_psi = [_weighted_l2(field.effective[path_id] - base_field.effective[path_id], base_field.weights)
                  for path_id in network.path_ids]
        row.update({"sup_D": max(sup_d.values()), "sup_Psi": max(sup_psi.values()), "l2_Psi": max(l2_psi),
                    "sup_D_by_path": sup_d, "sup_Psi_by_path": sup_psi})
        rows.append(row)
        logger.debug("Term %d: input distance %s, effective delay distance %s", n, row["input_l2"], row["sup_Psi"])

    return ConvergenceReport(rows, horizon.duration)


def _sup_cumulative(term, base_departures, horizon):
    distances = []
    for path_id, base_curve in base_departures.items():
        curve = cumulate(term[path_id], horizon)
        points = numpy.union1d(curve.times, base_curve.times)
        distances.append(sup_distance(curve(points), base_curve(points)))
    return max(distances, default=0.0)


def _weighted_l2(difference, weights):
    return float(numpy.sqrt(numpy.sum(weights * difference ** 2)))

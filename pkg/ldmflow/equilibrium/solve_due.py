import logging
from typing import Tuple
import numpy
from ..delays import delay_field
from ..EquilibriumCertificate import EquilibriumCertificate
from ..flows import l2_distance
from ..flows import uniform_flows
from ..loading import load_network
from ..Network import Network
from ..PathFlowVector import PathFlowVector
from ..PenaltyParams import PenaltyParams
from ..SolverConfig import SolverConfig
from ..TimeHorizon import TimeHorizon
from ..validation import check_feasibility
from .fixed_point_step import fixed_point_step
from .gap import gap


logger = logging.getLogger(__name__)


def solve_due(network: Network, horizon: TimeHorizon, params: PenaltyParams, cfg: SolverConfig,
              h0: PathFlowVector = None) -> Tuple[PathFlowVector, EquilibriumCertificate]:
    """Search departure-time and route equilibrium flows by projected fixed-point iteration.

    Every iteration loads the current flows, evaluates effective delays at the slot midpoints and
    computes the gap. The iteration stops when the gap is at most ``cfg.gap_tol`` (converged) or after
    ``cfg.max_iters`` iterations (not converged); otherwise it takes a :func:`fixed_point_step`.
    Non-convergence is reported in the certificate, not raised.

    Args:
    ----
    network:
        Network with trip table.
    horizon:
        Planning horizon; departures lie in [t0, tf].
    params:
        Schedule-deviation penalty.
    cfg:
        Solver settings, including the departure slots.
    h0:
        Initial flows, averaged onto the departure slots. Defaults to every demand spread evenly over
        the slots and paths of its OD pair.
    """
    if h0 is None:
        h0 = uniform_flows(network, horizon, 1)
    h = PathFlowVector.from_slot_rates(cfg.grid, h0.slot_rates(cfg.grid))
    report = check_feasibility(h, network)
    assert not report, "Initial path flows are infeasible: " + "; ".join(report)

    demands = dict(network.trips.items())
    trace = []
    field = _evaluate(network, horizon, params, cfg, h)
    value = gap(h, field)
    converged = False
    step_length = 0.0
    for iteration in range(1, cfg.max_iters + 1):
        if iteration > 1:
            field = _evaluate(network, horizon, params, cfg, h)
            value = gap(h, field)
        trace.append({"iteration": iteration,
                      "gap": value,
                      "max_support_residual": _max_support_residual(h, field),
                      "step_length": step_length})
        logger.debug("Iteration %d: gap %s", iteration, value)
        if value <= cfg.gap_tol:
            converged = True
            break
        if iteration == cfg.max_iters:
            break
        h_next = fixed_point_step(h, field, cfg, demands=demands, iteration=iteration)
        step_length = l2_distance(h_next, h)
        h = h_next

    if converged:
        logger.info("Equilibrium found after %d iterations, gap %s.", len(trace), value)
    else:
        logger.warning("No equilibrium within %d iterations, gap %s.", cfg.max_iters, value)

    support = {path_id: numpy.asarray(h[path_id](field.grid), dtype="float").reshape(-1) > 0
               for path_id in h.path_ids}
    residuals = {path_id: field.residuals(path_id) for path_id in h.path_ids}
    certificate = EquilibriumCertificate(value, field.od_minimum, field.grid, residuals, support, trace, converged)
    return h, certificate


def _evaluate(network, horizon, params, cfg, h):
    result = load_network(network, h, horizon)
    return delay_field(result, network, params, cfg.midpoints, weights=cfg.widths)


def _max_support_residual(h, field):
    values = [field.residuals(path_id)[numpy.asarray(h[path_id](field.grid)).reshape(-1) > 0]
              for path_id in h.path_ids]
    return max((float(numpy.max(v)) for v in values if v.size), default=0.0)

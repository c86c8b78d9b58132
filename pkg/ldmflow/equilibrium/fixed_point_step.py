from typing import Dict
import numpy
from ..DelayField import DelayField
from ..PathFlowVector import PathFlowVector
from ..SolverConfig import SolverConfig
from .project_od import project_od


def fixed_point_step(h: PathFlowVector, field: DelayField, cfg: SolverConfig, demands: Dict[tuple, float] = None,
                     iteration: int = 1) -> PathFlowVector:
    """One projection step ``h' = P(h - c * Psi(h))``, per OD pair and slot of the solver grid.

    Args:
    ----
    h:
        Current path flows.
    field:
        Effective delays of h at the slot midpoints of ``cfg.grid``.
    cfg:
        Solver settings.
    demands:
        OD pair to demand. Defaults to the volumes of h, which equal the demands for feasible h.
    iteration:
        Iteration number, used by the diminishing step rule.
    """
    assert field.grid.size == cfg.n_slots, \
        "Expected the delay field to be evaluated at the slot midpoints of the solver grid."
    widths = cfg.widths
    step = cfg.step(iteration)
    rates = h.slot_rates(cfg.grid)
    if demands is None:
        demands = h.od_volumes(field.path_od)

    grouped = {}
    for path_id in h.path_ids:
        grouped.setdefault(field.path_od[path_id], []).append(path_id)

    projected = {}
    for od, path_ids in grouped.items():
        shifted = numpy.concatenate([rates[path_id] - step * field.effective[path_id] for path_id in path_ids])
        result = project_od(shifted, numpy.tile(widths, len(path_ids)), demands.get(od, 0.0))
        for i, path_id in enumerate(path_ids):
            projected[path_id] = result[i * cfg.n_slots:(i + 1) * cfg.n_slots]
    return PathFlowVector.from_slot_rates(cfg.grid, projected)

import logging
from typing import List
from typing import Tuple
from ..PathFlow import PathFlow
from ..PathFlowVector import PathFlowVector
from ..SequenceSpec import SequenceSpec


logger = logging.getLogger(__name__)


def make_sequence(spec: SequenceSpec) -> List[PathFlowVector]:
    """Terms 1 to N of the sequence described by 'spec'; each term is a feasible flow vector."""
    return [sequence_term(spec, n)[0] for n in range(1, spec.length + 1)]


def sequence_base(spec: SequenceSpec) -> PathFlowVector:
    """The point the sequence converges to: the base of 'spec', made tall in "amplitude-stress" mode."""
    base = spec.base
    assert all((flow.rates >= 0).all() for _, flow in base.items()), "Base path flows should be nonnegative."
    if spec.mode != "amplitude-stress":
        return base
    spiked_path = base.path_ids[0]
    volume = base[spiked_path].volume
    width = volume / spec.amplitude
    flows = dict(base.items())
    if width > 0:
        t0, tf = spec.horizon.t0, spec.horizon.tf
        start = max(t0, min(spec.spike_start, tf - width))
        breakpoints = [start, start + width]
        rates = [spec.amplitude]
        if start > t0:
            breakpoints.insert(0, t0)
            rates.insert(0, 0.0)
        if start + width < tf:
            breakpoints.append(tf)
            rates.append(0.0)
        flows[spiked_path] = PathFlow(breakpoints, rates)
    return PathFlowVector(flows)


def sequence_term(spec: SequenceSpec, n: int) -> Tuple[PathFlowVector, bool]:
    """Term n of the sequence and whether clipping at zero was needed to build it."""
    base = sequence_base(spec)
    if spec.mode == "support-shift":
        offset = spec.shift * 2.0 ** -n
        raw = {path_id: flow.shift(offset) for path_id, flow in base.items()}
        raw = {path_id: flow.restrict(spec.horizon.t0, spec.horizon.tf) for path_id, flow in raw.items()}
        return _renormalized(spec, base, raw, clipped=False)
    if spec.direction is None:
        return base, False
    raw = {path_id: flow + spec.direction[path_id].scale(2.0 ** -n) for path_id, flow in base.items()}
    clipped = any((flow.rates < 0).any() for flow in raw.values())
    if clipped:
        logger.warning("Term %d of the sequence has negative rates, clipping at zero.", n)
        raw = {path_id: flow.clip() for path_id, flow in raw.items()}
    return _renormalized(spec, base, raw, clipped)


def _renormalized(spec, base, raw, clipped):
    base_volumes = base.od_volumes(spec.path_od)
    term = PathFlowVector(raw)
    volumes = term.od_volumes(spec.path_od)
    if not clipped and spec.mode != "support-shift":
        return term, clipped
    flows = {}
    for path_id, flow in raw.items():
        od = spec.path_od[path_id]
        factor = base_volumes[od] / volumes[od] if volumes[od] > 0 else 1.0
        flows[path_id] = flow.scale(factor)
    return PathFlowVector(flows), clipped

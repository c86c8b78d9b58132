from typing import Dict
from typing import Optional
from .PathFlowVector import PathFlowVector
from .TimeHorizon import TimeHorizon


MODES = ("scaled", "support-shift", "amplitude-stress")


class SequenceSpec:
    """Recipe for a sequence of path flows converging in L2 to a base point.

    Modes

    * "scaled": term n is base + 2^-n * direction.
    * "support-shift": term n is base delayed by shift * 2^-n.
    * "amplitude-stress": the first path's flow of the base is replaced by a spike of height
      'amplitude' carrying the same volume, starting at 'spike_start'; terms are then built as in
      "scaled" mode around that tall base.

    Terms with negative rates are clipped at zero and rescaled per OD pair to the base volume.

    Args:
    ----
    base:
        Base path flows.
    mode:
        One of "scaled", "support-shift", "amplitude-stress".
    length:
        Number of terms N; terms are numbered 1 to N.
    horizon:
        Planning horizon of the flows.
    direction:
        Perturbation direction for "scaled" and "amplitude-stress" modes. None means no perturbation.
    path_od:
        Path id to OD pair, for per-OD rescaling. Defaults to all paths sharing one OD pair.
    shift:
        Largest shift for "support-shift" mode.
    amplitude:
        Spike height for "amplitude-stress" mode.
    spike_start:
        Spike start for "amplitude-stress" mode. Defaults to a quarter into the horizon.
    """
    def __init__(self, base: PathFlowVector, mode: str, length: int, horizon: TimeHorizon,
                 direction: Optional[PathFlowVector] = None, path_od: Optional[Dict[str, tuple]] = None,
                 shift: float = 0.5, amplitude: float = 1e4, spike_start: Optional[float] = None):
        # pylint: disable=too-many-arguments
        assert mode in MODES, "Expected 'mode' to be one of {}.".format(", ".join(MODES))
        assert length >= 1, "Expected 'length' to be at least 1."
        assert amplitude > 0, "Expected 'amplitude' to be strictly positive."
        assert direction is None or set(direction.path_ids) == set(base.path_ids), \
            "Expected 'direction' to cover the paths of 'base'."
        self.base = base
        self.mode = mode
        self.length = int(length)
        self.horizon = horizon
        self.direction = direction
        self.path_od = dict(path_od) if path_od is not None else {path_id: ("*", "*") for path_id in base.path_ids}
        self.shift = float(shift)
        self.amplitude = float(amplitude)
        self.spike_start = horizon.t0 + horizon.duration / 4 if spike_start is None else float(spike_start)

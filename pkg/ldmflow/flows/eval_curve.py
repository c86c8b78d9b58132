from ..CumulativeCurve import CumulativeCurve
from ..typing import TimesType


def eval_curve(curve: CumulativeCurve, t: TimesType) -> TimesType:
    """Vehicle count of 'curve' at t, constant beyond both ends."""
    return curve(t)

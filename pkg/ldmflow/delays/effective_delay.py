from ..LoadingResult import LoadingResult
from ..loading import path_delay
from ..Network import Network
from ..PenaltyParams import PenaltyParams
from ..typing import TimesType


def effective_delay(result: LoadingResult, network: Network, params: PenaltyParams, path_id: str,
                    t: TimesType) -> TimesType:
    """Psi_p(t) = D_p(t) + F(t + D_p(t) - target)."""
    delay = path_delay(result, network, path_id, t)
    return delay + params(t + delay - params.target)

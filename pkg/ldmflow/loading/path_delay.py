from ..LoadingResult import LoadingResult
from ..Network import Network
from ..typing import TimesType
from .path_exit_time import path_exit_time


def path_delay(result: LoadingResult, network: Network, path_id: str, t: TimesType) -> TimesType:
    """Travel time D_p(t) on a path for departures at t."""
    return path_exit_time(result, network, path_id, t) - t

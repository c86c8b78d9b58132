from ..ExitTimeFunction import ExitTimeFunction


def invert_exit_time(tau: ExitTimeFunction, s: float) -> float:
    """Entry time t with tau(t) = s; exit times before the first breakpoint use ``t = s - beta``."""
    return tau.inverse(s)

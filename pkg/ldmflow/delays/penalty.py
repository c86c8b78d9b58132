from ..PenaltyParams import PenaltyParams


def penalty(params: PenaltyParams, deviation):
    """Penalty for arriving 'deviation' time units after the target (negative when early)."""
    return params(deviation)

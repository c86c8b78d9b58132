from typing import List
from ..importing import load_default_settings
from ..TimeHorizon import TimeHorizon


def slack_schedule(horizon: TimeHorizon, total_beta: float) -> List[float]:
    """Successive ends of the loading horizon.

    An explicit slack on the horizon is used as is. Otherwise loading starts with
    ``slack_multiplier * total_beta`` and, as long as volume remains on the network, is extended by
    doubling the slack up to ``slack_cap_multiplier * total_beta``.
    """
    if horizon.slack is not None:
        return [horizon.end]

    settings = load_default_settings()["loading"]
    slack = settings["slack_multiplier"] * total_beta
    cap = max(slack, settings["slack_cap_multiplier"] * total_beta)
    slacks = [slack]
    while slacks[-1] < cap:
        slacks.append(min(cap, max(2 * slacks[-1], total_beta)))
    return [horizon.tf + slack for slack in slacks]

from typing import Optional


class TimeHorizon:
    """Planning horizon [t0, tf] plus the loading slack allowed beyond tf.

    A slack of None means "not set": the loader then derives it from the network.
    """
    def __init__(self, t0: float, tf: float, slack: Optional[float] = None):
        assert t0 < tf, "Expected 't0' to be smaller than 'tf'."
        assert slack is None or slack >= 0, "Expected 'slack' to be nonnegative."
        self.t0 = float(t0)
        self.tf = float(tf)
        self.slack = None if slack is None else float(slack)

    def __eq__(self, other):
        return self.t0 == other.t0 and self.tf == other.tf and self.slack == other.slack

    def __repr__(self):
        return "TimeHorizon(t0={0}, tf={1}, slack={2})".format(self.t0, self.tf, self.slack)

    @property
    def duration(self) -> float:
        return self.tf - self.t0

    @property
    def end(self) -> float:
        """Latest time up to which loading may continue."""
        return self.tf + (self.slack or 0.0)

    def with_slack(self, slack: float) -> "TimeHorizon":
        return TimeHorizon(self.t0, self.tf, slack)

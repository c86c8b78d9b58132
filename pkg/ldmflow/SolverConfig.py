import numpy
from .TimeHorizon import TimeHorizon


STEP_RULES = ("fixed", "diminishing")


class SolverConfig:
    """Settings of the fixed-point equilibrium solver.

    Args:
    ----
    grid:
        Departure slot boundaries; path flows are constant on every slot.
    step_size:
        Step c of the projection iteration.
    step_rule:
        "fixed" uses c in every iteration, "diminishing" uses c / k in iteration k.
    max_iters:
        Largest number of iterations (delay evaluations).
    gap_tol:
        The solver stops once the gap drops to this value or below.
    """
    def __init__(self, grid, step_size: float = 10.0, step_rule: str = "fixed", max_iters: int = 200,
                 gap_tol: float = 1e-6):
        # pylint: disable=too-many-arguments
        grid = numpy.asarray(grid, dtype="float")
        assert grid.ndim == 1 and grid.size >= 2, "Expected a departure grid with at least one slot."
        assert numpy.all(numpy.diff(grid) > 0), "Departure grid should be strictly increasing."
        assert step_size > 0, "Expected 'step_size' to be strictly positive."
        assert step_rule in STEP_RULES, "Expected 'step_rule' to be one of {}.".format(", ".join(STEP_RULES))
        assert max_iters >= 0, "Expected 'max_iters' to be nonnegative."
        assert gap_tol >= 0, "Expected 'gap_tol' to be nonnegative."
        self.grid = grid
        self.step_size = float(step_size)
        self.step_rule = step_rule
        self.max_iters = int(max_iters)
        self.gap_tol = float(gap_tol)

    @classmethod
    def uniform(cls, horizon: TimeHorizon, n_slots: int, **kwargs) -> "SolverConfig":
        assert n_slots >= 1, "Expected at least one departure slot."
        return cls(numpy.linspace(horizon.t0, horizon.tf, n_slots + 1), **kwargs)

    @property
    def n_slots(self) -> int:
        return self.grid.size - 1

    @property
    def widths(self) -> numpy.ndarray:
        return numpy.diff(self.grid)

    @property
    def midpoints(self) -> numpy.ndarray:
        return (self.grid[:-1] + self.grid[1:]) / 2

    def step(self, iteration: int) -> float:
        if self.step_rule == "diminishing":
            return self.step_size / max(iteration, 1)
        return self.step_size

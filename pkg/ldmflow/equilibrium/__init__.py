from .fixed_point_step import fixed_point_step
from .gap import gap
from .project_od import project_od
from .solve_due import solve_due


__all__ = [
    "fixed_point_step",
    "gap",
    "project_od",
    "solve_due",
]

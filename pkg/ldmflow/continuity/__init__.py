from .convergence_report import convergence_report
from .halves_direction import halves_direction
from .make_sequence import make_sequence
from .make_sequence import sequence_base
from .make_sequence import sequence_term
from .random_direction import random_direction


__all__ = [
    "convergence_report",
    "halves_direction",
    "make_sequence",
    "random_direction",
    "sequence_base",
    "sequence_term",
]

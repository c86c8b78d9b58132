from .delay_field import delay_field
from .effective_delay import effective_delay
from .penalty import penalty


__all__ = [
    "delay_field",
    "effective_delay",
    "penalty",
]

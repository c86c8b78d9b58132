from .check_feasibility import check_feasibility
from .monotonicity_audit import monotonicity_audit
from .validate_network import validate_network


__all__ = [
    "check_feasibility",
    "monotonicity_audit",
    "validate_network",
]

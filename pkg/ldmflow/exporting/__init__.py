from .plot_convergence_report import plot_convergence_report
from .save_certificate import save_certificate
from .save_convergence_log import save_convergence_log
from .save_convergence_report import save_convergence_report
from .save_delay_field import save_delay_field
from .save_flows_as_json import save_flows_as_json
from .save_loading_result import save_loading_result
from .save_loading_summary import save_loading_summary
from .save_monotonicity_audit import save_monotonicity_audit


__all__ = [
    "plot_convergence_report",
    "save_certificate",
    "save_convergence_log",
    "save_convergence_report",
    "save_delay_field",
    "save_flows_as_json",
    "save_loading_result",
    "save_loading_summary",
    "save_monotonicity_audit",
]

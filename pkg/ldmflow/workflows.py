import functools
import logging
import os
import yaml
from matplotlib import pyplot
from .continuity import convergence_report
from .continuity import halves_direction
from .continuity import random_direction
from .delays import delay_field
from .equilibrium import solve_due
from .exceptions import HorizonExhaustedError
from .exporting import plot_convergence_report
from .exporting import save_certificate
from .exporting import save_convergence_log
from .exporting import save_convergence_report
from .exporting import save_delay_field
from .exporting import save_flows_as_json
from .exporting import save_loading_result
from .exporting import save_loading_summary
from .exporting import save_monotonicity_audit
from .flows import uniform_flows
from .loading import load_network
from .Scenario import Scenario
from .SequenceSpec import SequenceSpec
from .validation import check_feasibility
from .validation import monotonicity_audit
from .validation import validate_network


logger = logging.getLogger(__name__)

FAILURES = (AssertionError, HorizonExhaustedError, OSError, ValueError, KeyError, yaml.YAMLError)


def reports_failures(workflow):
    """Turn the errors a run can hit into exit status 1, with the error logged."""
    @functools.wraps(workflow)
    def wrapper(*args, **kwargs):
        try:
            return workflow(*args, **kwargs)
        except FAILURES as error:
            logger.error("%s failed: %s", workflow.__name__, error)
            return 1
    return wrapper


def _valid(scenario: Scenario, check_flows=True) -> bool:
    report = validate_network(scenario.network)
    if check_flows and scenario.flows is not None:
        report += check_feasibility(scenario.flows, scenario.network)
    for violation in report:
        logger.error("Scenario '%s': %s", scenario.filename, violation)
    return not report


def _base_flows(scenario: Scenario):
    if scenario.flows is not None:
        return scenario.flows
    return uniform_flows(scenario.network, scenario.horizon, 1)


@reports_failures
def run_load(scenario: Scenario) -> int:
    """Load the scenario flows and write the loading summary, arc curves, path delays, delay field and
    monotonicity audit. A truncated load still writes its files but exits with status 1."""
    if not _valid(scenario):
        return 1
    network = scenario.network
    h = _base_flows(scenario)
    grid = scenario.departure_grid()
    os.makedirs(scenario.output_dir, exist_ok=True)

    result = load_network(network, h, scenario.horizon)
    save_flows_as_json(h, os.path.join(scenario.output_dir, "flows.json"))
    save_loading_summary(result, os.path.join(scenario.output_dir, "loading_summary.json"))
    save_loading_result(result, network, grid, scenario.output_dir)
    save_delay_field(delay_field(result, network, scenario.penalty, grid), scenario.output_dir)
    audit = monotonicity_audit(result)
    save_monotonicity_audit(audit, os.path.join(scenario.output_dir, "monotonicity_audit.json"))
    for violation in audit:
        logger.error(violation)
    if result.truncated:
        logger.error("Scenario '%s': loading truncated at t=%s with volume left on arcs %s.",
                     scenario.filename, result.end, sorted(result.residual))
    return 0 if not audit and not result.truncated else 1


@reports_failures
def run_due(scenario: Scenario) -> int:
    """Solve for equilibrium flows and write them with the convergence log and certificate."""
    if not _valid(scenario):
        return 1
    os.makedirs(scenario.output_dir, exist_ok=True)
    h, certificate = solve_due(scenario.network, scenario.horizon, scenario.penalty, scenario.solver_config(),
                               h0=scenario.flows)
    save_flows_as_json(h, os.path.join(scenario.output_dir, "equilibrium.json"))
    save_convergence_log(certificate, os.path.join(scenario.output_dir, "convergence_log.csv"))
    save_certificate(certificate, os.path.join(scenario.output_dir, "certificate.json"))
    return 0


def _direction(scenario: Scenario, base):
    settings = scenario.continuity
    direction = settings["direction"]
    if direction is None or direction == "none":
        return None
    if direction == "random":
        return random_direction(scenario.network, scenario.horizon, settings["n_slots"], scenario.seed)
    assert isinstance(direction, dict), \
        "Scenario file '{}': field 'continuity.direction' should be 'random', 'none' or a mapping.".format(
            scenario.filename)
    return halves_direction(scenario.horizon, {path_id: float(direction.get(path_id, 0.0))
                                               for path_id in base.path_ids})


@reports_failures
def run_continuity(scenario: Scenario) -> int:
    """Measure the convergence of delays along a converging sequence of flows and write the report."""
    if not _valid(scenario):
        return 1
    settings = scenario.continuity
    base = _base_flows(scenario)
    spec = SequenceSpec(base, settings["mode"], settings["length"], scenario.horizon,
                        direction=_direction(scenario, base),
                        path_od=scenario.network.path_od(),
                        shift=settings["shift"],
                        amplitude=settings["amplitude"],
                        spike_start=settings["spike_start"])
    report = convergence_report(scenario.network, scenario.penalty, spec, scenario.departure_grid())
    os.makedirs(scenario.output_dir, exist_ok=True)
    save_convergence_report(report, scenario.output_dir)
    if settings["plot"]:
        fig = plot_convergence_report(report)
        fig.savefig(os.path.join(scenario.output_dir, "continuity_plot.png"), metadata={"Software": None})
        pyplot.close(fig)
    return 0

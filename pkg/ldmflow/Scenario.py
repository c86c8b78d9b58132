from typing import Optional
import numpy
from .Network import Network
from .PathFlowVector import PathFlowVector
from .PenaltyParams import PenaltyParams
from .SolverConfig import SolverConfig
from .TimeHorizon import TimeHorizon


class Scenario:
    """Everything one run needs: network, optional flows, horizon, penalty, solver and continuity settings,
    output directory and seed. Built by :func:`ldmflow.importing.load_scenario`.
    """
    def __init__(self, filename: str, network: Network, horizon: TimeHorizon, penalty: PenaltyParams,
                 settings: dict, output_dir: str, seed: int, flows: Optional[PathFlowVector] = None):
        # pylint: disable=too-many-arguments
        self.filename = filename
        self.network = network
        self.horizon = horizon
        self.penalty = penalty
        self.settings = settings
        self.output_dir = output_dir
        self.seed = int(seed)
        self.flows = flows

    def departure_grid(self) -> numpy.ndarray:
        n_points = self.settings["departure_grid"]["n_points"]
        return numpy.linspace(self.horizon.t0, self.horizon.tf, n_points)

    def solver_config(self) -> SolverConfig:
        solver = self.settings["solver"]
        return SolverConfig.uniform(self.horizon, solver["n_slots"],
                                    step_size=solver["step_size"],
                                    step_rule=solver["step_rule"],
                                    max_iters=solver["max_iters"],
                                    gap_tol=solver["gap_tol"])

    @property
    def continuity(self) -> dict:
        return self.settings["continuity"]

import logging
from . import continuity
from . import delays
from . import equilibrium
from . import exporting
from . import flows
from . import importing
from . import loading
from . import validation
from .__version__ import __version__
from .Arc import Arc
from .ArcState import ArcState
from .ConvergenceReport import ConvergenceReport
from .CumulativeCurve import CumulativeCurve
from .DelayField import DelayField
from .EquilibriumCertificate import EquilibriumCertificate
from .exceptions import HorizonExhaustedError
from .ExitTimeFunction import ExitTimeFunction
from .LoadingResult import LoadingResult
from .Network import Network
from .Path import Path
from .PathFlow import PathFlow
from .PathFlowVector import PathFlowVector
from .PenaltyParams import PenaltyParams
from .Scenario import Scenario
from .SequenceSpec import SequenceSpec
from .SolverConfig import SolverConfig
from .TimeHorizon import TimeHorizon
from .TripTable import TripTable


logging.getLogger(__name__).addHandler(logging.NullHandler())

__author__ = "ldmflow developers"
__email__ = ''
__all__ = [
    "__version__",
    "Arc",
    "ArcState",
    "continuity",
    "ConvergenceReport",
    "CumulativeCurve",
    "DelayField",
    "delays",
    "equilibrium",
    "EquilibriumCertificate",
    "ExitTimeFunction",
    "exporting",
    "flows",
    "HorizonExhaustedError",
    "importing",
    "loading",
    "LoadingResult",
    "Network",
    "Path",
    "PathFlow",
    "PathFlowVector",
    "PenaltyParams",
    "Scenario",
    "SequenceSpec",
    "SolverConfig",
    "TimeHorizon",
    "TripTable",
    "validation",
]

"""Multi-objective optimization toolkit.

The optimizer moves grey-wolf style search agents inside shuffled
memeplexes and maintains a bounded non-dominated archive.  The package
ships the standard two- and three-objective benchmark suites, quality
indicators (hypervolume, IGD, GD, spread), an NSGA-II baseline, a
rolling-horizon emergency-allocation model, and a reproducible
experiment harness exposed through the ``greyleap`` command.
"""

from .allocation import generate_scenario, rolling_horizon_run
from .core import ContractError, RandomSource, dominates
from .indicators import (
    IndicatorSettings,
    generational_distance,
    hypervolume,
    igd,
    spread,
)
from .nsga2 import Nsga2Params, nsga2_run
from .optimizer import AlgorithmParams, run
from .problems import Problem, get_problem, problem_names
from .ranking import crowding_distance, fast_nondominated_sort
from .records import GenerationSnapshot, RunRecord

__version__ = "0.1.0"

__all__ = [
    "AlgorithmParams",
    "ContractError",
    "GenerationSnapshot",
    "IndicatorSettings",
    "Nsga2Params",
    "Problem",
    "RandomSource",
    "RunRecord",
    "__version__",
    "crowding_distance",
    "dominates",
    "fast_nondominated_sort",
    "generate_scenario",
    "generational_distance",
    "get_problem",
    "hypervolume",
    "igd",
    "nsga2_run",
    "problem_names",
    "rolling_horizon_run",
    "run",
    "spread",
]

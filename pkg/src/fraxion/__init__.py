"""Optimal radiotherapy fractionation under the linear-quadratic model."""

from fraxion.equivalence import (
    BedConversion,
    EquivalenceQuery,
    bed_uniform,
    convert_bed,
    effects_equal,
    min_total_dose,
)
from fraxion.errors import (
    CapExceeded,
    FraxionError,
    Infeasible,
    InfeasibleN,
    InternalConsistencyError,
    NoFeasibleGridPoint,
    TooLarge,
    ValidationError,
)
from fraxion.p1 import P1Case, SolutionReport, boundary_mix, solve_p1, solve_p1_fixed
from fraxion.p2 import P2Case, solve_p2, solve_p2_fixed
from fraxion.radiobiology import (
    DoseBounds,
    ProblemParams,
    Protocol,
    Radiosensitivity,
    Thresholds,
    oar_effect,
    omega,
    p1_thresholds,
    p2_thresholds,
    phi,
    survival_fraction,
    tumor_effect,
)

__version__ = "0.1.0"

"""Weighted Fermat-Torricelli solvers for regular tetrahedra.

Closed-form axial solutions for two pairs of equal weights, the signed-weight
exterior critical point, vertex-angle formulas, floating/absorbed
classification, the ray-stretch (plasticity) construction, and independent
numerical oracles for cross-validation.
"""

__version__ = "0.1.0"

from .analytic import (
    RadicalIntermediates,
    complementary_axial,
    ft_axial,
    quartic_coefficients,
    radical_intermediates,
    solve_symmetric,
)
from .angles import AngleSet, angles_at
from .equilibrium import CaseLabel, classify, equilibrium_residual
from .errors import (
    BranchCancellationFailure,
    CoincidentPoints,
    DegenerateTetrahedron,
    DegenerateTriangle,
    EqualWeights,
    FloatingViolated,
    FtSolveError,
    NoBracket,
    NoConvergence,
    NonPositiveEdge,
    OutOfDomain,
    ZeroPolynomial,
)
from .geom_core import (
    FtSolution,
    RegularEmbedding,
    SymmetricInstance,
    WeightedTetrahedron,
    axial_coordinate,
    axial_distances,
    axis_point,
    embed_regular,
    objective,
    unit_vector,
)
from .numeric import (
    SolverConfig,
    minimize_reduced,
    reduced_objective,
    signed_critical_point,
    stationarity_defect,
    weiszfeld,
)
from .plasticity import (
    DihedralData,
    PlasticityInstance,
    dihedral_alpha,
    dihedral_angle,
    height_012,
    measure_dihedral_data,
    predict_a04p,
    stretch,
    verify_invariance,
    vertex_angle,
)
from .quartic import QuarticCoefficients, RealRoots, real_roots

"""Exact computer algebra for the solenoidal Virasoro algebra.

Scalars live in the field of rational functions in mu_1..mu_n, a, b, lambda
and c with denominators restricted to the linear forms mu.alpha.  On top of
them the package builds the rank-n bracket with its central extension, the
2-cocycle toolkit, tensor-density modules, Verma modules for the
lexicographic triangular decomposition, graded generalized Verma modules,
and a deterministic verification CLI (console script: solvir).
"""

__version__ = "0.1.0"

from .scalars import (  # noqa: F401
    A,
    B,
    CCHARGE,
    LAMBDA,
    ONE,
    ZERO,
    Polynomial,
    Scalar,
    mu_poly,
    parse_scalar,
    scalar_str,
)
from .algebra import (  # noqa: F401
    CENTRAL,
    AlgebraElement,
    SolenoidalAlgebra,
    basis_element,
    central_element,
    element_str,
    euler_element,
    jacobi_residual,
    lex_compare,
    lex_sign,
    parse_element,
    triangular_split,
    vir_bracket,
    vir_i_cocycle_coefficients,
    vir_i_element,
    witt_bracket,
)
from .cocycle import (  # noqa: F401
    EtaTable,
    OneCochain,
    TwoCochain,
    canonical_cochain,
    canonical_cocycle,
    coboundary,
    cocycle_residual,
    full_equation_residual,
    h2_rank_experiment,
    normalize_cocycle,
    recognize_eta,
    solve_functional_equation,
)
from .density import (  # noqa: F401
    DensityParams,
    DensityVector,
    classify_density,
    density_act,
    density_axiom_residual,
    duality_check,
    formal_params,
    lattice_params,
    submodule_invariance_check,
)
from .verma import (  # noqa: F401
    PBWMonomial,
    TruncationBox,
    VermaVector,
    is_singular_within_box,
    pbw_enumerate,
    singular_residuals,
    vacuum,
    verma_act,
    weight_space_dim_truncated,
)
from .gvm import (  # noqa: F401
    GvmMonomial,
    GvmVector,
    grade_of,
    gvm_act,
    level_weight_basis,
    quotient_dim_level1,
)

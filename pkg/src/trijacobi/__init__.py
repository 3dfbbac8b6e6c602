"""Two-variable Jacobi polynomials on the triangle.

The package covers univariate and bivariate Jacobi polynomials, Racah
polynomials and the Racah matrices that connect the three symmetry-related
bases on the triangle, and an exact checker for the operator relations of
the rank-two Jacobi algebra in a differential and a difference realization.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateDenominator,
    DegenerateLowerParameter,
    DomainError,
    IrreducibleRatio,
    NegativeRatio,
    PoleError,
    TriJacobiError,
)
from .hyper import gamma_ratio, hyp_terminating, pochhammer
from .poly import BivarPoly, PolyDiffOp, anticommutator, commutator
from .jacobi1d import (
    RecurrenceCoeffs,
    jacobi1d_coeffs,
    jacobi1d_diffop,
    jacobi1d_eval,
    jacobi1d_norm,
    jacobi1d_norm_ratio,
    jacobi1d_poly,
    jacobi1d_recurrence,
    jacobi1d_reflect_check,
    jacobi1d_reflect_poly_check,
)
from .racah import (
    RacahParams,
    TruncationCase,
    racah_difference,
    racah_eval,
    racah_lambda,
    racah_norm,
    racah_orthonormal,
    racah_orthonormal_table,
    racah_realization,
    racah_recurrence,
    racah_structure_constants,
    racah_weight,
)
from .triangle import (
    D3,
    TriParams,
    d3_compose,
    d3_table,
    family_norm,
    family_params,
    tri_eval,
    tri_family_eval,
    tri_family_poly,
    tri_family_values,
    tri_indices,
    tri_norm,
    tri_norm_ratio,
    tri_overlap,
    tri_poly,
    tri_values,
    tri_weight,
)
from .quadrature import QuadratureRule, gauss_jacobi_01, triangle_rule
from .lattice import LatticeOp, build_lattice_realization
from .connection import (
    ConnectionMatrix,
    connection_pi,
    connection_sigma,
    connection_sigma_from_pi,
    expand_pi_in_e,
    expand_sigma_in_e,
    expand_sigma_in_pi,
)
from .algebra import (
    RelationReport,
    build_diff_realization,
    verify_appendix_a,
    verify_hermiticity,
    verify_intertwining,
    verify_rank1_subalgebras,
)

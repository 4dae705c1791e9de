"""Exact arithmetic for the Fricke surface, its double, and Markov trees."""

from .exact import (
    AT_INFINITY,
    DEGENERATE_CUBIC,
    DomainError,
    LineParameter,
    ProjectivePoint,
    QuadraticIrrational,
    format_rational,
    line_point,
    line_third_intersection,
    make_quadratic,
    normalize_projective,
    parse_rational,
    slope_between,
    sqrt_exact,
    surface_defect,
)
from .fricke import (
    ComposeResult,
    Finite,
    FrickePoint,
    FrickeSurface,
    Infinite,
    Undefined,
    compose,
    compose_alternative,
    p2_compose,
    p2_involution,
    p2_viete,
    param_affine,
    param_affine_inverse,
    phi,
    psi,
    star,
    viete,
)
from .sections import (
    SectionFrame,
    SectionPoint,
    cf_convergent,
    chebyshev_b,
    dihedral,
    infinity_points,
    quadric_add,
    quadric_double,
    quadric_inverse,
    solve_z,
    ta_power,
)
from .double_fricke import (
    F2Point,
    F2SectionFrame,
    F2SectionPoint,
    f2_compose,
    f2_infinity_points,
    f2_p2_compose,
    f2_p2_involution,
    f2_p2_viete,
    f2_param_affine,
    f2_phi,
    f2_psi,
    f2_quadric_add,
    f2_quadric_double,
    f2_quadric_inverse,
    negative_tree,
    nielsen,
    sqrt_descend,
    square_lift,
)
from .tree import (
    DOUBLE_ROOT,
    MARKOV_ROOT,
    CanonicalTriple,
    FrobeniusReport,
    TreeNode,
    canonical,
    frobenius_scan,
    fundamental_point,
    fundamental_points,
    generate,
)

__version__ = "0.1.0"

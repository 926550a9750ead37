"""Exact projective geometry over Q and F_p: ordinary lines and conics.

The package provides canonical-form projective primitives, arrangement
statistics with the classical incidence inequalities, quadratic Cremona
transformations, a constructive ordinary-conic finder, and an exhaustive
brute-force oracle that independently certifies the finder's output.
"""

from .errors import (
    ContractedCurve,
    DegenerateInput,
    GenerationFailed,
    InternalInvariantViolation,
    NotInGenericLocus,
    OrdconicError,
    PreconditionViolated,
    RenderError,
    UnsupportedDegree,
    UnsupportedField,
)
from .fields import PrimeField, QQ, RationalField
from .projective import (
    Conic,
    ProjLine,
    ProjPoint,
    collinear,
    conic_contains_all,
    conic_from_lines,
    conic_is_singular,
    conic_through_five,
    line_through,
    meet,
    points_on_conic,
    points_on_line,
)
from .incidence import (
    IncidenceProfile,
    PointConfig,
    dual_hirzebruch_check,
    incidence_profile,
    melchior_check,
    ordinary_line_bound_check,
    ordinary_lines,
    primal_hirzebruch_check,
)
from .cremona import (
    ContractedTo,
    CremonaMap,
    Generic,
    R_FG,
    R_FH,
    R_GH,
    Undefined,
    cremona_apply,
    cremona_apply_generic,
    cremona_image_of_line,
    cremona_new,
    transform_multiplicity_profile,
)
from .finder import (
    AllOnConic,
    Collinear,
    IntersectingPair,
    OrdinaryConic,
    TripleLine,
    classify_main_case,
    find_ordinary_conic,
    resolve_cremona_case,
    resolve_triple_line,
)
from .oracle import (
    FinitePlane,
    OrdinaryConicCertificate,
    conic_point_count_spectrum,
    enumerate_ordinary_conics,
    exists_conic_through_all_bruteforce,
    find_ordinary_curves_deg_d,
    finite_plane,
)
from .generators import (
    GeneratorSpec,
    XorShift64Star,
    gen_finite_plane_full,
    gen_general_position,
    gen_random_rational,
    gen_singular_only,
    gen_triangle_midpoints_centroid,
    generate,
)

__version__ = "0.1.0"

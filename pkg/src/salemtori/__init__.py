"""Exact certification of Salem numbers realized by torus automorphisms.

Everything decision-level is integer or rational arithmetic; floating point
only seeds root boxes that are then certified exactly.  See the README for
the command line surface.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .classify import (
    CandidateSet,
    ClassificationReport,
    Finite,
    InfiniteFamily,
    PairingClass,
    Witness,
    case_of,
    enumerate_complements,
    finiteness,
    pairing_classes,
    realizable,
)
from .intervals import Box, Interval, decimal_string, log_interval
from .poly import (
    IntPoly,
    cyclotomic,
    factor_bounded,
    format_poly,
    gcd_poly,
    is_cyclotomic_product,
    is_irreducible,
    is_squarefree,
    parse_poly,
    split_cyclotomic,
    squarefree_part,
)
from .salem import (
    NotSalem,
    RootBox,
    SalemCertificate,
    count_real_roots,
    is_salem,
    isolate_all_roots,
    isolate_real_roots,
    lambda_approx,
    lambda_interval,
    refine_root_box,
    trace_transform,
)
from .torus import (
    ModelOrigin,
    NotForced,
    QuadOrderMatrix,
    TorusModel,
    UNCONSTRAINED,
    a_form_matrix,
    dyadic_cm_family,
    entropy,
    from_quartic,
    gl2z_model,
    is_projective,
    ns_charpoly,
    picard_rank,
    quad_order_model,
    reorient,
    verify_jd,
)
from .wedge import InversionCandidates, NotSquare, SquareValues, exterior_square, invert_wedge, square_values
from . import errors

__version__ = "0.1.0"

__all__ = [
    "Box",
    "CandidateSet",
    "ClassificationReport",
    "Finite",
    "InfiniteFamily",
    "IntPoly",
    "Interval",
    "InversionCandidates",
    "KERNEL_BACKEND",
    "ModelOrigin",
    "NotForced",
    "NotSalem",
    "NotSquare",
    "PairingClass",
    "QuadOrderMatrix",
    "RootBox",
    "SalemCertificate",
    "SquareValues",
    "TorusModel",
    "UNCONSTRAINED",
    "Witness",
    "a_form_matrix",
    "case_of",
    "count_real_roots",
    "cyclotomic",
    "decimal_string",
    "dyadic_cm_family",
    "entropy",
    "enumerate_complements",
    "errors",
    "exterior_square",
    "factor_bounded",
    "finiteness",
    "format_poly",
    "from_quartic",
    "gcd_poly",
    "gl2z_model",
    "invert_wedge",
    "is_cyclotomic_product",
    "is_irreducible",
    "is_projective",
    "is_salem",
    "is_squarefree",
    "isolate_all_roots",
    "isolate_real_roots",
    "lambda_approx",
    "lambda_interval",
    "log_interval",
    "ns_charpoly",
    "pairing_classes",
    "parse_poly",
    "picard_rank",
    "quad_order_model",
    "realizable",
    "refine_root_box",
    "reorient",
    "split_cyclotomic",
    "square_values",
    "squarefree_part",
    "trace_transform",
    "verify_jd",
    "__version__",
]

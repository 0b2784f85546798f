"""Pell conics and cubic Pell equations over finite fields.

Group laws, projective parameterizations and their explicit isomorphisms,
closed-form solution counts, full O(q^2) enumeration, seeded random
sampling, two-thirds-size point compression, and brute-force oracles to
check it all against.
"""

from .field import CubeClass, CubeKind, Field, is_prime
from .conic import (
    ConicParams,
    ConicPoint,
    ProjPoint2,
    conic_contains,
    conic_enumerate_proj,
    conic_enumerate_solutions,
    conic_inverse,
    conic_mul,
    conic_norm,
    conic_order,
    conic_params,
    phi,
    phi_inv,
)
from .cubic import (
    CubicParams,
    CubicPoint,
    GroupOrderReport,
    ProjPoint3,
    cubic_compress,
    cubic_conjugate,
    cubic_contains,
    cubic_enumerate_solutions,
    cubic_mul,
    cubic_norm,
    cubic_order,
    cubic_params,
    cubic_sample,
    excluded_classes,
    proj_enumerate,
    psi,
    psi1,
    psi2,
    psi2_inv,
    psi3,
    psi3_char3,
    psi3_inv,
)
from .oracle import (
    SolutionSet,
    brute_force_conic,
    brute_force_cubic,
    check_crt_split,
    check_element_orders,
)

__version__ = "0.1.0"

__all__ = [
    "CubeClass",
    "CubeKind",
    "ConicParams",
    "ConicPoint",
    "CubicParams",
    "CubicPoint",
    "Field",
    "GroupOrderReport",
    "ProjPoint2",
    "ProjPoint3",
    "SolutionSet",
    "brute_force_conic",
    "brute_force_cubic",
    "check_crt_split",
    "check_element_orders",
    "conic_contains",
    "conic_enumerate_proj",
    "conic_enumerate_solutions",
    "conic_inverse",
    "conic_mul",
    "conic_norm",
    "conic_order",
    "conic_params",
    "cubic_compress",
    "cubic_conjugate",
    "cubic_contains",
    "cubic_enumerate_solutions",
    "cubic_mul",
    "cubic_norm",
    "cubic_order",
    "cubic_params",
    "cubic_sample",
    "excluded_classes",
    "is_prime",
    "phi",
    "phi_inv",
    "proj_enumerate",
    "psi",
    "psi1",
    "psi2",
    "psi2_inv",
    "psi3",
    "psi3_char3",
    "psi3_inv",
]

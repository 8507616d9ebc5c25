"""pnfield: primitive and normal elements of finite field extensions.

Exact desk-scale machinery for F_p ⊂ F_q ⊂ F_{q^n}: integer and polynomial
totients, character sums, the four characteristic functions for primitive and
normal elements, exhaustive density counts, small-subset searches, and a
claim-verification suite with a three-state outcome taxonomy
(ASSERTED-PASS / REPORTED / FAIL).
"""

from .errors import ConsistencyError, FieldSpecError, ResourceLimitError
from .field import FieldCtx, build_field, get_field, parse_field_spec
from .numtheory import (
    Factorization,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mertens_report,
    mobius,
    multiplicative_order,
    phi_bounds_report,
)
from .polyfq import (
    CyclotomicProfile,
    PolyFactorization,
    cyclotomic_factor_counts,
    factor_x_n_minus_1,
    poly_gcd,
    poly_mobius,
    poly_phi,
    poly_sigma,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CyclotomicProfile",
    "Factorization",
    "FieldCtx",
    "FieldSpecError",
    "PolyFactorization",
    "ResourceLimitError",
    "build_field",
    "cyclotomic_factor_counts",
    "divisors",
    "euler_phi",
    "factor_x_n_minus_1",
    "factorize",
    "get_field",
    "is_prime",
    "mertens_report",
    "mobius",
    "multiplicative_order",
    "parse_field_spec",
    "phi_bounds_report",
    "poly_gcd",
    "poly_mobius",
    "poly_phi",
    "poly_sigma",
]

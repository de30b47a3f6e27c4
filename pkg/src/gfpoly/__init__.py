"""Generalized Fibonacci polynomial sequences over Z[x].

Exact integer-coefficient polynomial arithmetic, the family recurrences,
closed-form gcd theorems with a brute-force oracle, and a catalog of
checkable identities.
"""

from .polyring import ONE, X, ZERO, Poly, exact_div, poly_gcd_z
from .families import (
    BUILTIN,
    PARTNER,
    Family,
    Kind,
    NoValidEquivalentError,
    NotEquivalentError,
    SequenceCache,
    UnknownFamilyError,
    builtin_family,
    builtin_names,
    equivalent_family,
    random_pair,
    sequence,
)
from .gcd_theorems import (
    GcdCase,
    GcdReport,
    compare,
    gcd_fib_closed,
    gcd_lucas_closed,
    gcd_mixed_closed,
    gcd_with_initial,
    min_even_index,
    oracle_gcd,
    two_adic_valuation,
)
from .identities import (
    IDENTITY_GROUPS,
    IdentityReport,
    check_addition_cross,
    check_addition_laws,
    check_convolution,
    check_discriminant_laws,
    check_lucas_addition,
    decompose_mod_gm,
    decompose_pow2,
    divides_iff,
    iter_reports,
    mixed_shift_gcd,
    neighbor_gcd,
    odd_divisor_divides,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN",
    "Family",
    "GcdCase",
    "GcdReport",
    "IDENTITY_GROUPS",
    "IdentityReport",
    "Kind",
    "NoValidEquivalentError",
    "NotEquivalentError",
    "ONE",
    "PARTNER",
    "Poly",
    "SequenceCache",
    "UnknownFamilyError",
    "X",
    "ZERO",
    "builtin_family",
    "builtin_names",
    "check_addition_cross",
    "check_addition_laws",
    "check_convolution",
    "check_discriminant_laws",
    "check_lucas_addition",
    "compare",
    "decompose_mod_gm",
    "decompose_pow2",
    "divides_iff",
    "equivalent_family",
    "exact_div",
    "gcd_fib_closed",
    "gcd_lucas_closed",
    "gcd_mixed_closed",
    "gcd_with_initial",
    "iter_reports",
    "min_even_index",
    "mixed_shift_gcd",
    "neighbor_gcd",
    "odd_divisor_divides",
    "oracle_gcd",
    "poly_gcd_z",
    "random_pair",
    "sequence",
    "two_adic_valuation",
    "__version__",
]

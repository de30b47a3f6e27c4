"""Closed forms for gcds of generalized Fibonacci polynomial terms.

Fibonacci-type families are strong divisibility sequences:

    gcd(F[m], F[n]) = F[gcd(m, n)]

and that property characterizes the Fibonacci-type initial values.  For a
Lucas-type family the answer depends on the 2-adic valuations of the
indices: it is L[gcd(m, n)] when they agree and gcd(L[gcd(m, n)], p0),
which is 1 or 2, when they differ.  For a mixed pair over the same (d, g)
the Lucas term wins exactly when the Fibonacci-side index carries strictly
more factors of two.  Every closed form is checked against oracle_gcd, a
brute-force Z[x] gcd of the actual terms.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .families import Family, Kind, NotEquivalentError, sequence
from .polyring import Poly, poly_gcd_z


class GcdCase(enum.Enum):
    FIB_STRONG = "FibStrong"
    LUCAS_EQUAL_E2 = "LucasEqualE2"
    LUCAS_UNEQUAL_E2 = "LucasUnequalE2"
    MIXED_DOMINANT = "MixedDominant"
    MIXED_OTHERWISE = "MixedOtherwise"


@dataclass(frozen=True)
class GcdReport:
    m: int
    n: int
    closed_form: Poly
    oracle: Poly
    agrees: bool
    case: GcdCase

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "case_tag": self.case.value,
            "closed_form": self.closed_form.to_json(),
            "oracle": self.oracle.to_json(),
            "agrees": self.agrees,
        }


def two_adic_valuation(n: int) -> int:
    """Largest k with 2**k dividing n.  Defined for positive n only.

    >>> [two_adic_valuation(n) for n in (1, 2, 12, 96)]
    [0, 1, 2, 5]
    """
    if n < 1:
        raise ValueError("two_adic_valuation needs a positive integer")
    return (n & -n).bit_length() - 1


def _require_kind(family: Family, kind: Kind, who: str) -> None:
    if family.kind is not kind:
        raise ValueError(f"{who} needs a {kind.value}-type family, got {family.kind.value}")


def _require_positive(*indices: int) -> None:
    for i in indices:
        if i < 1:
            raise ValueError("indices must be positive")


def gcd_fib_closed(family: Family, m: int, n: int) -> Poly:
    """gcd(F[m], F[n]) by strong divisibility: F[gcd(m, n)], sign-normalized."""
    _require_kind(family, Kind.FIBONACCI, "gcd_fib_closed")
    _require_positive(m, n)
    return sequence(family).term(math.gcd(m, n)).normalized()


def gcd_with_initial(family: Family, d: int) -> Poly:
    """gcd(L[d], p0): the 'otherwise' value, always the constant 1 or 2."""
    _require_kind(family, Kind.LUCAS, "gcd_with_initial")
    _require_positive(d)
    return poly_gcd_z(sequence(family).term(d), family.p0)


def gcd_lucas_closed(family: Family, m: int, n: int) -> tuple[Poly, GcdCase]:
    """gcd(L[m], L[n]): L[gcd(m, n)] when the 2-adic valuations of m and n
    agree, else gcd(L[gcd(m, n)], p0)."""
    _require_kind(family, Kind.LUCAS, "gcd_lucas_closed")
    _require_positive(m, n)
    d = math.gcd(m, n)
    if two_adic_valuation(m) == two_adic_valuation(n):
        return sequence(family).term(d).normalized(), GcdCase.LUCAS_EQUAL_E2
    return gcd_with_initial(family, d), GcdCase.LUCAS_UNEQUAL_E2


def gcd_mixed_closed(fib: Family, lucas: Family, m: int, n: int) -> tuple[Poly, GcdCase]:
    """gcd(F[m], L[n]) for an equivalent pair: L[gcd(m, n)] when the
    Fibonacci-side index m has strictly larger 2-adic valuation, else
    gcd(L[gcd(m, n)], p0)."""
    _require_kind(fib, Kind.FIBONACCI, "gcd_mixed_closed")
    _require_kind(lucas, Kind.LUCAS, "gcd_mixed_closed")
    if (fib.d, fib.g) != (lucas.d, lucas.g):
        raise NotEquivalentError(
            f"{fib.name} and {lucas.name} do not share the same (d, g)"
        )
    _require_positive(m, n)
    d = math.gcd(m, n)
    if two_adic_valuation(m) > two_adic_valuation(n):
        return sequence(lucas).term(d).normalized(), GcdCase.MIXED_DOMINANT
    return gcd_with_initial(lucas, d), GcdCase.MIXED_OTHERWISE


def oracle_gcd(family_a: Family, family_b: Family, m: int, n: int) -> Poly:
    """Brute force: build both terms and take their Z[x] gcd."""
    if m < 0 or n < 0:
        raise ValueError("term indices must be nonnegative")
    return poly_gcd_z(sequence(family_a).term(m), sequence(family_b).term(n))


def compare(family_a: Family, family_b: Family, m: int, n: int,
            closed: Poly, case: GcdCase) -> GcdReport:
    """Pit a closed form against the brute-force oracle for one index pair."""
    oracle = oracle_gcd(family_a, family_b, m, n)
    return GcdReport(m, n, closed, oracle, closed == oracle, case)


def min_even_index(family: Family, bound: int) -> int | None:
    """Smallest m in 1..bound with gcd(L[m], p0) = 2, or None.

    When it exists, gcd(L[n], p0) = 2 holds exactly for the multiples of the
    returned index; that periodicity turns the 'otherwise' gcd branch into a
    divisibility test on gcd(m, n).
    """
    _require_kind(family, Kind.LUCAS, "min_even_index")
    if bound < 1:
        raise ValueError("bound must be positive")
    two = Poly([2])
    for m in range(1, bound + 1):
        if gcd_with_initial(family, m) == two:
            return m
    return None

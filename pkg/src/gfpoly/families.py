"""Generalized Fibonacci polynomial families and their term sequences.

A family is the data (d, g, p0, p1) driving the second-order recurrence

    G[0] = p0,  G[1] = p1,  G[n] = d * G[n-1] + g * G[n-2]

over Z[x].  Two shapes are distinguished.  Fibonacci type starts 0, 1.
Lucas type starts with a constant p0 of absolute value 1 or 2 and with
2 * p1 = p0 * d, which makes alpha = 2 / p0 an integer in {1, -1, 2, -2}.
A Fibonacci-type and a Lucas-type family sharing the same (d, g) are
called equivalent; the closed-form mixed gcds below need such pairs.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .polyring import ONE, X, ZERO, Poly, exact_div, poly_gcd_z


class Kind(enum.Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"


class UnknownFamilyError(ValueError):
    """Name not present in the built-in registry."""


class NoValidEquivalentError(ValueError):
    """No Lucas-type initial values satisfy the side conditions for this (d, g)."""


class NotEquivalentError(ValueError):
    """The two families do not share the same recurrence (d, g)."""


@dataclass(frozen=True)
class Family:
    name: str
    kind: Kind
    d: Poly
    g: Poly
    p0: Poly
    p1: Poly

    def violations(self) -> list[str]:
        """All rule violations, empty when the family is well formed.

        Shared rules: d and g nonzero, gcd(d, g) = 1.  Fibonacci type fixes
        p0 = 0 and p1 = 1.  Lucas type needs a constant p0 with |p0| in
        {1, 2}, the coupling 2 * p1 = p0 * d, and gcd(p0, p1) = gcd(p0, d) = 1.
        """
        problems = []
        if self.d.is_zero:
            problems.append("d must be nonzero")
        if self.g.is_zero:
            problems.append("g must be nonzero")
        if not self.d.is_zero and not self.g.is_zero and poly_gcd_z(self.d, self.g) != ONE:
            problems.append("gcd(d, g) != 1")
        if self.kind is Kind.FIBONACCI:
            if self.p0 != ZERO:
                problems.append("p0 must be 0")
            if self.p1 != ONE:
                problems.append("p1 must be 1")
            return problems
        if self.p0.degree != 0 or abs(self.p0.leading) not in (1, 2):
            problems.append("p0 must be a constant of absolute value 1 or 2")
            return problems
        if self.p1 * 2 != self.p0 * self.d:
            problems.append("2*p1 must equal p0*d")
        if poly_gcd_z(self.p0, self.p1) != ONE:
            problems.append("gcd(p0, p1) != 1")
        if poly_gcd_z(self.p0, self.d) != ONE:
            problems.append("gcd(p0, d) != 1")
        return problems

    @property
    def is_valid(self) -> bool:
        return not self.violations()

    def discriminant(self) -> Poly:
        """d**2 + 4g, the square of the difference of the recurrence roots."""
        return self.d * self.d + self.g * 4

    def alpha(self) -> int:
        """2 / p0 as an exact integer.  Defined for Lucas-type families only."""
        if self.kind is not Kind.LUCAS:
            raise ValueError("alpha is defined for Lucas-type families only")
        return 2 // self.p0.leading

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "d": self.d.to_json(),
            "g": self.g.to_json(),
            "p0": self.p0.to_json(),
            "p1": self.p1.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> Family:
        return cls(
            name=data["name"],
            kind=Kind(data["kind"]),
            d=Poly.from_json(data["d"]),
            g=Poly.from_json(data["g"]),
            p0=Poly.from_json(data["p0"]),
            p1=Poly.from_json(data["p1"]),
        )


def _fib(name: str, d: Poly, g: Poly) -> Family:
    return Family(name, Kind.FIBONACCI, d, g, ZERO, ONE)


def _lucas(name: str, d: Poly, g: Poly, p0: int, p1: Poly) -> Family:
    return Family(name, Kind.LUCAS, d, g, Poly([p0]), p1)


_TWO_X = Poly([0, 2])
_THREE_X = Poly([0, 3])
_X_PLUS_2 = Poly([2, 1])
_TWO_X_PLUS_1 = Poly([1, 2])

BUILTIN: dict[str, Family] = {
    f.name: f
    for f in (
        _fib("fibonacci", X, ONE),
        _lucas("lucas", X, ONE, 2, X),
        _fib("pell", _TWO_X, ONE),
        # Kept for the validator: fails the Lucas-type side conditions.
        _lucas("pell-lucas", _TWO_X, ONE, 2, _TWO_X),
        _lucas("pell-lucas-prime", _TWO_X, ONE, 1, X),
        _fib("fermat", _THREE_X, Poly([-2])),
        _lucas("fermat-lucas", _THREE_X, Poly([-2]), 2, _THREE_X),
        _fib("chebyshev2", _TWO_X, Poly([-1])),
        _lucas("chebyshev1", _TWO_X, Poly([-1]), 1, X),
        _fib("jacobsthal", ONE, _TWO_X),
        _lucas("jacobsthal-lucas", ONE, _TWO_X, 2, ONE),
        _fib("morgan-voyce-b", _X_PLUS_2, Poly([-1])),
        _lucas("morgan-voyce-c", _X_PLUS_2, Poly([-1]), 2, _X_PLUS_2),
        _fib("paper-2x1-fib", _TWO_X_PLUS_1, ONE),
        _lucas("paper-2x1-lucas", _TWO_X_PLUS_1, ONE, 2, _TWO_X_PLUS_1),
    )
}

# Equivalent partners: same (d, g), opposite kind.  pell-lucas is absent on
# purpose; it fails validation and pell pairs with pell-lucas-prime instead.
PARTNER: dict[str, str] = {
    "fibonacci": "lucas",
    "pell": "pell-lucas-prime",
    "fermat": "fermat-lucas",
    "chebyshev2": "chebyshev1",
    "jacobsthal": "jacobsthal-lucas",
    "morgan-voyce-b": "morgan-voyce-c",
    "paper-2x1-fib": "paper-2x1-lucas",
}
PARTNER.update({lucas: fib for fib, lucas in list(PARTNER.items())})


def builtin_names() -> list[str]:
    return list(BUILTIN)


def builtin_family(name: str) -> Family:
    try:
        return BUILTIN[name]
    except KeyError:
        raise UnknownFamilyError(f"unknown family {name!r}; known: {', '.join(BUILTIN)}") from None


def equivalent_family(family: Family) -> Family:
    """The partner of the opposite kind over the same (d, g).

    Lucas to Fibonacci always exists (start 0, 1).  Fibonacci to Lucas
    prefers p0 = 2 with p1 = d, which makes alpha = 1; when that candidate
    fails validation (even content in d) it falls back to p0 = 1 with
    p1 = d / 2.  Built-in inputs resolve to their registered partner.
    """
    if family.name in PARTNER:
        partner = BUILTIN[PARTNER[family.name]]
        if (partner.d, partner.g) == (family.d, family.g):
            return partner
    if family.kind is Kind.LUCAS:
        return _fib(f"{family.name}.fib", family.d, family.g)
    for p0 in (2, 1):
        p1 = family.d if p0 == 2 else exact_div(family.d, Poly([2]))
        if p1 is None:
            continue
        candidate = _lucas(f"{family.name}.lucas", family.d, family.g, p0, p1)
        if candidate.is_valid:
            return candidate
    raise NoValidEquivalentError(
        f"no Lucas-type initial values fit d={family.d}, g={family.g}"
    )


class SequenceCache:
    """Memoized terms of one family's recurrence."""

    def __init__(self, family: Family):
        self.family = family
        self._terms = [family.p0, family.p1]

    def term(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("term index must be nonnegative")
        terms = self._terms
        d, g = self.family.d, self.family.g
        while len(terms) <= n:
            terms.append(d * terms[-1] + g * terms[-2])
        return terms[n]


_CACHES: dict[Family, SequenceCache] = {}


def sequence(family: Family) -> SequenceCache:
    """Shared per-family cache; callers in one process reuse computed terms."""
    cache = _CACHES.get(family)
    if cache is None:
        cache = _CACHES[family] = SequenceCache(family)
    return cache


def random_pair(rng: random.Random, name: str, max_degree: int = 3, coeff_bound: int = 5) -> tuple[Family, Family]:
    """A random valid Fibonacci-type family and its Lucas-type partner.

    d and g are drawn with degree at most max_degree and coefficients in
    [-coeff_bound, coeff_bound], then rejection-sampled until the pair of
    families validates.
    """
    def draw() -> Poly:
        degree = rng.randint(0, max_degree)
        return Poly(rng.randint(-coeff_bound, coeff_bound) for _ in range(degree + 1))

    while True:
        fib = _fib(name, draw(), draw())
        if not fib.is_valid:
            continue
        try:
            return fib, equivalent_family(fib)
        except NoValidEquivalentError:
            continue

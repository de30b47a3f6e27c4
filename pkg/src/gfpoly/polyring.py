"""Dense univariate polynomials over the integers.

Coefficients are arbitrary-precision ints stored in ascending order of
degree: index i holds the coefficient of x**i.  The canonical form never
stores trailing zeros, so the zero polynomial is the empty tuple and two
polynomials are equal exactly when their coefficient tuples are equal.

The gcd here is the full Z[x] gcd: integer content is part of the answer,
not factored away.  gcd(4x + 4, 6) is 2, not 1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, init=False)
class Poly:
    """An element of Z[x].

    >>> Poly([1, 0, 1])
    Poly('x^2 + 1')
    >>> Poly([0, 2]) * Poly([3, 1]) + Poly([5])
    Poly('2x^2 + 6x + 5')
    >>> Poly([0, 0, 0]).is_zero
    True
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial (degree minus infinity)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other: Poly | int) -> Poly:
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_at(self, x0: int) -> int:
        """Evaluate at an integer point by Horner's rule.

        >>> Poly([3, 0, 4, 0, 1]).eval_at(2)
        35
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def content(self) -> int:
        """Nonnegative gcd of all coefficients; 0 for the zero polynomial."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> Poly:
        """self divided by its content, sign-fixed to a positive leading coefficient."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no primitive part")
        c = self.content()
        if self.leading < 0:
            c = -c
        return Poly(x // c for x in self.coeffs)

    def normalized(self) -> Poly:
        """Sign-canonical form: leading coefficient made positive. Content is kept."""
        if self.is_zero or self.leading > 0:
            return self
        return -self

    def to_json(self) -> list[str]:
        """Ascending coefficients as decimal strings (exact at any magnitude)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str | int]) -> Poly:
        return cls(int(c) for c in data)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Inverse of str(): round-trips bit-exactly.

        Terms are INT, INTx^INT, x^INT, or the power-1/coefficient-1
        shorthands, joined by + or -.  Whitespace is allowed only around
        the joining signs.

        >>> Poly.parse("8x^3 + 12x^2 + 12x + 4")
        Poly('8x^3 + 12x^2 + 12x + 4')
        >>> Poly.parse("-x^2 + 3")
        Poly('-x^2 + 3')
        """
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        acc: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            sign = 1
            if s[pos] in "+-":
                sign = -1 if s[pos] == "-" else 1
                pos += 1
                while pos < len(s) and s[pos].isspace():
                    pos += 1
            elif not first:
                raise ValueError(f"missing sign before {s[pos:]!r}")
            m = _TERM_RE.match(s, pos)
            if m is None or m.end() == pos:
                raise ValueError(f"bad polynomial syntax near {s[pos:]!r}")
            num, xpart, exp = m.groups()
            coeff = sign * (int(num) if num is not None else 1)
            e = 0 if xpart is None else (1 if exp is None else int(exp))
            acc[e] = acc.get(e, 0) + coeff
            pos = m.end()
            first = False
            gap = pos
            while gap < len(s) and s[gap].isspace():
                gap += 1
            if gap > pos and gap < len(s) and s[gap] not in "+-":
                raise ValueError(f"bad polynomial syntax near {s[pos:]!r}")
            pos = gap
        out = [0] * (max(acc) + 1)
        for e, c in acc.items():
            out[e] = c
        return cls(out)


_TERM_RE = re.compile(r"(\d+)?(x(?:\^(\d+))?)?")

ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def exact_div(num: Poly, den: Poly) -> Poly | None:
    """Exact quotient in Z[x]: the q with num == den * q, or None.

    Long division from the top; any step that fails integrality, or a
    nonzero final remainder, means no such q exists over the integers.

    >>> exact_div(Poly([0, 2, 0, 1]), Poly([2, 0, 1]))
    Poly('x')
    >>> exact_div(Poly([1, 1]), Poly([0, 1])) is None
    True
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return ZERO
    dn, dd = len(num.coeffs) - 1, len(den.coeffs) - 1
    if dn < dd:
        return None
    lead = den.coeffs[-1]
    rem = list(num.coeffs)
    quo = [0] * (dn - dd + 1)
    for k in range(dn - dd, -1, -1):
        head = rem[k + dd]
        if head == 0:
            continue
        c, leftover = divmod(head, lead)
        if leftover:
            return None
        quo[k] = c
        for i, dc in enumerate(den.coeffs):
            rem[k + i] -= c * dc
    if any(rem[:dd]):
        return None
    return Poly(quo)


def _shifted(p: Poly, k: int) -> Poly:
    return Poly((0,) * k + p.coeffs)


def _pseudo_rem(f: Poly, g: Poly) -> Poly:
    # Remainder of lc(g)**k * f by g for some k >= 0; stays in Z[x] with no
    # rational arithmetic.  Requires deg f >= deg g and g nonzero.
    dg = len(g.coeffs) - 1
    lead = g.coeffs[-1]
    r = f
    while not r.is_zero and len(r.coeffs) - 1 >= dg:
        shift = len(r.coeffs) - 1 - dg
        r = r * lead - _shifted(g * r.coeffs[-1], shift)
    return r


def poly_gcd_z(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor in Z[x], integer content included.

    Canonical representative: positive leading coefficient.  gcd(p, 0) is
    p sign-normalized and gcd(0, 0) = 0.  Computed as gcd of contents times
    the gcd of primitive parts, the latter by a primitive pseudo-remainder
    sequence.

    >>> poly_gcd_z(Poly([0, 2, 0, 1]), Poly([0, 3, 0, 4, 0, 1]))
    Poly('x')
    >>> poly_gcd_z(Poly([4, 12, 12, 8]), Poly([2]))
    Poly('2')
    """
    if p.is_zero:
        return q.normalized()
    if q.is_zero:
        return p.normalized()
    c = math.gcd(p.content(), q.content())
    a, b = p.primitive_part(), q.primitive_part()
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b)
        a, b = b, (r.primitive_part() if not r.is_zero else ZERO)
    return a * c

"""Catalog of checkable identities for generalized Fibonacci polynomials.

Every check returns IdentityReport records carrying the compared values, a
verdict, and (for the divisibility decompositions) a quotient witness that
re-multiplies to the original term.  Families named F below are Fibonacci
type, L are Lucas type; pair checks take an equivalent (F, L) pair sharing
one recurrence (d, g) and use alpha = 2 / p0 of the Lucas side.

Checked shapes, with all indices restricted as noted:

  convolution       F[m+n+1] = F[m+1]F[n+1] + g F[m]F[n]
  addition-minus    F[n+m] = a F[n]L[m] - (-g)^m F[n-m]          (n >= m)
  addition-plus     F[n+m] = a F[m]L[n] + (-g)^m F[n-m]          (n >= m)
  addition-cross    2(-g)^m F[n-m] = a (F[n]L[m] - F[m]L[n])     (n >= m)
  discriminant-fib  (d^2+4g) F[m+n+1] = a^2 (L[m+1]L[n+1] + g L[m]L[n])
  discriminant-lucas L[m+n+2] = a L[m+1]L[n+1] + g (a L[m]L[n] - L[m+n])
  lucas-addition    L[m+n] = a L[m]L[n] + (-1)^(m+1) g^m L[n-m]  (m <= n)
  dic2-decompose    L[mq+r] = L[m] T + correction                (r < m)
  dic2-pow2         L[(2^n) r] = L[r] T + p0 g^((2^(n-1)) r)     (n >= 2)
  divides-iff       F[m] | F[n]  iff  m | n
  odd-divisor       L[m/q] | L[m] for odd divisors q of m
  neighbor-gcd      gcd of terms at distance 1 or 2
  mixed-shift       three gcd shift reductions across a pair
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .families import Family, Kind, NotEquivalentError, sequence
from .polyring import ONE, ZERO, Poly, exact_div, poly_gcd_z


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    family: str
    params: tuple[int, ...]
    lhs: Poly
    rhs: Poly
    passed: bool
    witness: Poly | None = None

    def to_json(self) -> dict:
        data = {
            "identity_id": self.identity_id,
            "family": self.family,
            "params": list(self.params),
            "pass": self.passed,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        return data


def _equation(identity_id: str, family: str, params: tuple[int, ...],
              lhs: Poly, rhs: Poly, witness: Poly | None = None) -> IdentityReport:
    return IdentityReport(identity_id, family, params, lhs, rhs, lhs == rhs, witness)


def _require_kind(family: Family, kind: Kind, who: str) -> None:
    if family.kind is not kind:
        raise ValueError(f"{who} needs a {kind.value}-type family, got {family.kind.value}")


def _require_pair(fib: Family, lucas: Family, who: str) -> str:
    _require_kind(fib, Kind.FIBONACCI, who)
    _require_kind(lucas, Kind.LUCAS, who)
    if (fib.d, fib.g) != (lucas.d, lucas.g):
        raise NotEquivalentError(f"{fib.name} and {lucas.name} do not share the same (d, g)")
    return f"{fib.name}/{lucas.name}"


def check_convolution(family: Family, m: int, n: int) -> IdentityReport:
    _require_kind(family, Kind.FIBONACCI, "check_convolution")
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    f = sequence(family).term
    lhs = f(m + n + 1)
    rhs = f(m + 1) * f(n + 1) + family.g * f(m) * f(n)
    return _equation("convolution", family.name, (m, n), lhs, rhs)


def check_addition_laws(fib: Family, lucas: Family, m: int, n: int) -> tuple[IdentityReport, IdentityReport]:
    """The two shift laws expressing F[n+m] through the equivalent pair."""
    label = _require_pair(fib, lucas, "check_addition_laws")
    if m < 0 or n < m:
        raise ValueError("need 0 <= m <= n")
    f, l = sequence(fib).term, sequence(lucas).term
    alpha = lucas.alpha()
    swing = (-fib.g) ** m * f(n - m)
    lhs = f(n + m)
    minus = _equation("addition-minus", label, (m, n), lhs, f(n) * l(m) * alpha - swing)
    plus = _equation("addition-plus", label, (m, n), lhs, f(m) * l(n) * alpha + swing)
    return minus, plus


def check_addition_cross(fib: Family, lucas: Family, m: int, n: int) -> IdentityReport:
    """Difference of the two addition laws; isolates the swing term."""
    label = _require_pair(fib, lucas, "check_addition_cross")
    if m < 0 or n < m:
        raise ValueError("need 0 <= m <= n")
    f, l = sequence(fib).term, sequence(lucas).term
    alpha = lucas.alpha()
    lhs = (-fib.g) ** m * f(n - m) * 2
    rhs = (f(n) * l(m) - f(m) * l(n)) * alpha
    return _equation("addition-cross", label, (m, n), lhs, rhs)


def check_discriminant_laws(fib: Family, lucas: Family, m: int, n: int) -> tuple[IdentityReport, IdentityReport]:
    label = _require_pair(fib, lucas, "check_discriminant_laws")
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    f, l = sequence(fib).term, sequence(lucas).term
    alpha = lucas.alpha()
    a2 = alpha * alpha
    first = _equation(
        "discriminant-fib", label, (m, n),
        fib.discriminant() * f(m + n + 1),
        l(m + 1) * l(n + 1) * a2 + lucas.g * l(m) * l(n) * a2,
    )
    second = _equation(
        "discriminant-lucas", label, (m, n),
        l(m + n + 2),
        l(m + 1) * l(n + 1) * alpha + lucas.g * (l(m) * l(n) * alpha - l(m + n)),
    )
    return first, second


def check_lucas_addition(lucas: Family, m: int, n: int) -> IdentityReport:
    _require_kind(lucas, Kind.LUCAS, "check_lucas_addition")
    if m < 0 or n < m:
        raise ValueError("need 0 <= m <= n")
    l = sequence(lucas).term
    alpha = lucas.alpha()
    sign = -1 if m % 2 == 0 else 1
    rhs = l(m) * l(n) * alpha + lucas.g ** m * l(n - m) * sign
    return _equation("lucas-addition", lucas.name, (m, n), l(m + n), rhs)


def decompose_mod_gm(lucas: Family, m: int, q: int, r: int) -> IdentityReport:
    """L[mq+r] split into a multiple of L[m] plus a signed g-power correction.

    The correction depends on the parity of q through t = ceil(q / 2):
    odd q uses (-1)^(m(t-1)+t+r) g^((t-1)m+r) L[m-r], even q uses
    (-1)^((m+1)t) g^(mt) L[r].  The quotient witness is recovered by exact
    division and re-multiplied into rhs, so pass means bit-exact equality.
    """
    _require_kind(lucas, Kind.LUCAS, "decompose_mod_gm")
    if m < 1 or q < 1 or r < 0:
        raise ValueError("need m >= 1, q >= 1, r >= 0")
    if r >= m:
        raise ValueError("need r < m")
    l = sequence(lucas).term
    t = (q + 1) // 2
    if q % 2 == 1:
        sign = -1 if (m * (t - 1) + t + r) % 2 else 1
        correction = lucas.g ** ((t - 1) * m + r) * l(m - r) * sign
    else:
        sign = -1 if ((m + 1) * t) % 2 else 1
        correction = lucas.g ** (m * t) * l(r) * sign
    target = l(m * q + r)
    witness = exact_div(target - correction, l(m))
    rhs = l(m) * witness + correction if witness is not None else correction
    return IdentityReport("dic2-decompose", lucas.name, (m, q, r), target, rhs,
                          witness is not None and target == rhs, witness)


def decompose_pow2(lucas: Family, n: int, r: int) -> IdentityReport:
    """L[(2^n) r] = L[r] T + p0 g^((2^(n-1)) r) with an exact witness T.

    The constant factor on the g-power is p0, which equals 2 / alpha.
    """
    _require_kind(lucas, Kind.LUCAS, "decompose_pow2")
    if n < 2:
        raise ValueError("need n >= 2")
    if r < 1:
        raise ValueError("need r >= 1")
    l = sequence(lucas).term
    correction = lucas.g ** (2 ** (n - 1) * r) * lucas.p0.leading
    target = l(2 ** n * r)
    witness = exact_div(target - correction, l(r))
    rhs = l(r) * witness + correction if witness is not None else correction
    return IdentityReport("dic2-pow2", lucas.name, (n, r), target, rhs,
                          witness is not None and target == rhs, witness)


def divides_iff(fib: Family, m: int, n: int) -> IdentityReport:
    """F[m] divides F[n] exactly when m divides n.

    lhs and rhs are the two operands F[n] and F[m], not an equation; passed
    states the biconditional.  The only-if direction is vacuous when F[m]
    is zero or a unit (anything divides by those), which happens for
    degenerate recurrences and for families whose d is the constant 1.
    """
    _require_kind(fib, Kind.FIBONACCI, "divides_iff")
    if m < 1 or n < 1:
        raise ValueError("indices must be positive")
    f = sequence(fib).term
    num, den = f(n), f(m)
    if den.is_zero:
        divisible = num.is_zero
        witness = None
    else:
        witness = exact_div(num, den)
        divisible = witness is not None
    should = n % m == 0
    uninformative = den.is_zero or (den.degree == 0 and abs(den.leading) == 1)
    passed = divisible if should else (not divisible or uninformative)
    return IdentityReport("divides-iff", fib.name, (m, n), num, den, passed, witness)


def odd_divisor_divides(lucas: Family, m: int, q: int) -> IdentityReport:
    """L[m/q] divides L[m] for any odd divisor q of m."""
    _require_kind(lucas, Kind.LUCAS, "odd_divisor_divides")
    if m < 1:
        raise ValueError("m must be positive")
    if q < 1 or q % 2 == 0 or m % q != 0:
        raise ValueError("q must be an odd divisor of m")
    l = sequence(lucas).term
    target = l(m)
    witness = exact_div(target, l(m // q))
    rhs = l(m // q) * witness if witness is not None else ZERO
    return IdentityReport("odd-divisor", lucas.name, (m, q), target, rhs,
                          witness is not None, witness)


def neighbor_gcd(family: Family, m: int, n: int) -> IdentityReport:
    """gcd of terms whose indices differ by 1 or 2.

    Lucas type: L[1] when both indices are odd, else 1.  Fibonacci type:
    F[2] when both are even, else 1.
    """
    if m < 1 or n < 1:
        raise ValueError("indices must be positive")
    if not 0 < abs(m - n) <= 2:
        raise ValueError("indices must differ by 1 or 2")
    t = sequence(family).term
    if family.kind is Kind.LUCAS:
        predicted = t(1).normalized() if m % 2 == 1 and n % 2 == 1 else ONE
    else:
        predicted = t(2).normalized() if m % 2 == 0 and n % 2 == 0 else ONE
    oracle = poly_gcd_z(t(m), t(n))
    return _equation("neighbor-gcd", family.name, (m, n), oracle, predicted)


def mixed_shift_gcd(fib: Family, lucas: Family, m: int, n: int) -> list[IdentityReport]:
    """Shift reductions for gcd(F[i], L[n]) against gcd(L[j], L[n]).

    Part 1 always applies; part 2 needs m > n and part 3 needs m < n, so a
    call yields one or two reports.
    """
    label = _require_pair(fib, lucas, "mixed_shift_gcd")
    if m < 1 or n < 1:
        raise ValueError("indices must be positive")
    f, l = sequence(fib).term, sequence(lucas).term
    ln = l(n)
    reports = [
        _equation("mixed-shift-1", label, (m, n),
                  poly_gcd_z(f(m + n + 1), ln), poly_gcd_z(l(m + 1), ln))
    ]
    if m > n:
        reports.append(_equation("mixed-shift-2", label, (m, n),
                                 poly_gcd_z(f(m - n + 1), ln), poly_gcd_z(l(m + 1), ln)))
    elif m < n:
        reports.append(_equation("mixed-shift-3", label, (m, n),
                                 poly_gcd_z(f(n - m + 1), ln), poly_gcd_z(l(m - 1), ln)))
    return reports


IDENTITY_GROUPS: tuple[str, ...] = (
    "convolution",
    "addition",
    "addition-cross",
    "discriminant",
    "lucas-addition",
    "dic2-decompose",
    "dic2-pow2",
    "divides-iff",
    "odd-divisor",
    "neighbor-gcd",
    "mixed-shift",
)


def iter_reports(group: str, fib: Family, lucas: Family, max_index: int) -> Iterator[IdentityReport]:
    """Sweep one identity group over an equivalent pair up to max_index.

    Single-family identities use the half of the pair they apply to.  The
    dic2-pow2 sweep bounds the generated sequence index by 2 * max_index
    since its parameters scale the index exponentially.
    """
    if group == "convolution":
        for m in range(max_index + 1):
            for n in range(max_index + 1):
                yield check_convolution(fib, m, n)
    elif group == "addition":
        for m in range(max_index + 1):
            for n in range(m, max_index + 1):
                yield from check_addition_laws(fib, lucas, m, n)
    elif group == "addition-cross":
        for m in range(max_index + 1):
            for n in range(m, max_index + 1):
                yield check_addition_cross(fib, lucas, m, n)
    elif group == "discriminant":
        for m in range(max_index + 1):
            for n in range(max_index + 1):
                yield from check_discriminant_laws(fib, lucas, m, n)
    elif group == "lucas-addition":
        for m in range(max_index + 1):
            for n in range(m, max_index + 1):
                yield check_lucas_addition(lucas, m, n)
    elif group == "dic2-decompose":
        for m in range(1, max_index + 1):
            for q in range(1, max_index + 1):
                for r in range(min(m, max_index + 1)):
                    yield decompose_mod_gm(lucas, m, q, r)
    elif group == "dic2-pow2":
        cap = max(4, 2 * max_index)
        n = 2
        while 2 ** n <= cap:
            r = 1
            while 2 ** n * r <= cap:
                yield decompose_pow2(lucas, n, r)
                r += 1
            n += 1
    elif group == "divides-iff":
        for m in range(1, max_index + 1):
            for n in range(1, max_index + 1):
                yield divides_iff(fib, m, n)
    elif group == "odd-divisor":
        for m in range(1, max_index + 1):
            for q in range(1, m + 1, 2):
                if m % q == 0:
                    yield odd_divisor_divides(lucas, m, q)
    elif group == "neighbor-gcd":
        for family in (fib, lucas):
            for m in range(1, max_index + 1):
                for n in (m + 1, m + 2):
                    if n <= max_index:
                        yield neighbor_gcd(family, m, n)
    elif group == "mixed-shift":
        for m in range(1, max_index + 1):
            for n in range(1, max_index + 1):
                yield from mixed_shift_gcd(fib, lucas, m, n)
    else:
        raise ValueError(f"unknown identity group {group!r}; known: {', '.join(IDENTITY_GROUPS)}")

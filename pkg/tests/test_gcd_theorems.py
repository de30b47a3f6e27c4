"""Closed-form gcd results checked against the brute-force Z[x] oracle.

Every closed form here has an independent check: oracle_gcd builds the two
terms explicitly and runs the generic polynomial gcd, so the closed forms
never get to grade their own homework.  Frozen examples pin the individual
branch outputs; grid sweeps then compare branch selection wholesale.
"""

from __future__ import annotations

import doctest
import math

import pytest

import gfpoly.gcd_theorems as gcd_theorems_module
from gfpoly.families import NotEquivalentError, builtin_family, sequence
from gfpoly.gcd_theorems import (
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
from gfpoly.polyring import ONE, Poly

FIB = builtin_family("fibonacci")
LUC = builtin_family("lucas")


class TestTwoAdicValuation:
    def test_values(self):
        assert [two_adic_valuation(n) for n in range(1, 13)] == [0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2]
        assert two_adic_valuation(1 << 20) == 20

    def test_rejects_nonpositive(self):
        for bad in (0, -1, -8):
            with pytest.raises(ValueError):
                two_adic_valuation(bad)

    def test_doubling_law(self):
        for n in range(1, 200):
            assert two_adic_valuation(2 * n) == two_adic_valuation(n) + 1
            assert two_adic_valuation(2 * n + 1) == 0


class TestFibonacciGcd:
    def test_frozen_examples(self):
        assert gcd_fib_closed(FIB, 4, 6) == Poly([0, 1])
        assert gcd_fib_closed(FIB, 3, 9) == Poly([1, 0, 1])
        assert gcd_fib_closed(FIB, 5, 7) == ONE
        assert gcd_fib_closed(FIB, 6, 6) == Poly([0, 3, 0, 4, 0, 1])

    def test_matches_oracle_on_grid(self):
        for name in ("fibonacci", "jacobsthal", "paper-2x1-fib"):
            f = builtin_family(name)
            for m in range(1, 13):
                for n in range(m, 13):
                    assert gcd_fib_closed(f, m, n) == oracle_gcd(f, f, m, n), (name, m, n)

    def test_sign_normalized_even_for_negative_leading(self):
        # chebyshev2 terms alternate sign patterns; gcd output must have a
        # positive leading coefficient regardless
        f = builtin_family("chebyshev2")
        for m, n in [(3, 6), (4, 6), (5, 10), (6, 9)]:
            got = gcd_fib_closed(f, m, n)
            assert got.leading > 0
            assert got == oracle_gcd(f, f, m, n)

    def test_wrong_kind_rejected(self):
        with pytest.raises(ValueError, match="fibonacci-type"):
            gcd_fib_closed(LUC, 2, 3)

    def test_nonpositive_index_rejected(self):
        with pytest.raises(ValueError):
            gcd_fib_closed(FIB, 0, 3)


class TestLucasGcd:
    def test_equal_valuation_branch(self):
        got, case = gcd_lucas_closed(LUC, 3, 9)
        assert got == Poly([0, 3, 0, 1])
        assert case is GcdCase.LUCAS_EQUAL_E2

    def test_unequal_valuation_branch_value_one(self):
        got, case = gcd_lucas_closed(LUC, 2, 4)
        assert got == ONE
        assert case is GcdCase.LUCAS_UNEQUAL_E2

    def test_unequal_valuation_branch_value_two(self):
        f = builtin_family("paper-2x1-lucas")
        got, case = gcd_lucas_closed(f, 3, 6)
        assert got == Poly([2])
        assert case is GcdCase.LUCAS_UNEQUAL_E2
        assert oracle_gcd(f, f, 3, 6) == Poly([2])

    def test_unequal_result_is_constant_one_or_two(self):
        for name in ("lucas", "fermat-lucas", "jacobsthal-lucas", "paper-2x1-lucas"):
            f = builtin_family(name)
            for m in range(1, 13):
                for n in range(m, 13):
                    if two_adic_valuation(m) == two_adic_valuation(n):
                        continue
                    got, _ = gcd_lucas_closed(f, m, n)
                    assert got.coeffs in ((1,), (2,)), (name, m, n, got)

    def test_matches_oracle_on_grid(self):
        for name in ("lucas", "pell-lucas-prime", "chebyshev1", "paper-2x1-lucas"):
            f = builtin_family(name)
            for m in range(1, 13):
                for n in range(m, 13):
                    got, _ = gcd_lucas_closed(f, m, n)
                    assert got == oracle_gcd(f, f, m, n), (name, m, n)

    def test_gcd_with_initial_values(self):
        assert gcd_with_initial(LUC, 1) == ONE
        assert gcd_with_initial(builtin_family("paper-2x1-lucas"), 3) == Poly([2])
        assert gcd_with_initial(builtin_family("paper-2x1-lucas"), 2) == ONE
        with pytest.raises(ValueError):
            gcd_with_initial(FIB, 2)

    def test_wrong_kind_rejected(self):
        with pytest.raises(ValueError, match="lucas-type"):
            gcd_lucas_closed(FIB, 2, 3)


class TestMixedGcd:
    def test_dominant_branch(self):
        got, case = gcd_mixed_closed(FIB, LUC, 4, 2)
        assert got == Poly([2, 0, 1])
        assert case is GcdCase.MIXED_DOMINANT
        assert oracle_gcd(FIB, LUC, 4, 2) == Poly([2, 0, 1])

    def test_otherwise_branch(self):
        got, case = gcd_mixed_closed(FIB, LUC, 3, 6)
        assert got == ONE
        assert case is GcdCase.MIXED_OTHERWISE

    def test_equal_valuations_take_otherwise_branch(self):
        _, case = gcd_mixed_closed(FIB, LUC, 6, 2)
        assert case is GcdCase.MIXED_OTHERWISE

    def test_matches_oracle_on_grid(self):
        pairs = [("fibonacci", "lucas"), ("jacobsthal", "jacobsthal-lucas"),
                 ("paper-2x1-fib", "paper-2x1-lucas")]
        for fib_name, lucas_name in pairs:
            fib = builtin_family(fib_name)
            lucas = builtin_family(lucas_name)
            for m in range(1, 13):
                for n in range(1, 13):
                    got, _ = gcd_mixed_closed(fib, lucas, m, n)
                    assert got == oracle_gcd(fib, lucas, m, n), (fib_name, m, n)

    def test_orientation_matters(self):
        # feeding the Lucas index where the Fibonacci index belongs must
        # break on some pairs; (m, n) = (4, 2) is one
        fib, lucas = FIB, LUC
        swapped, _ = gcd_mixed_closed(fib, lucas, 2, 4)
        assert swapped != oracle_gcd(fib, lucas, 4, 2)

    def test_requires_matching_recurrence(self):
        with pytest.raises(NotEquivalentError):
            gcd_mixed_closed(FIB, builtin_family("pell-lucas-prime"), 2, 3)

    def test_requires_correct_kinds(self):
        with pytest.raises(ValueError):
            gcd_mixed_closed(LUC, FIB, 2, 3)


class TestCompare:
    def test_agreeing_report(self):
        closed, case = gcd_lucas_closed(LUC, 3, 9)
        report = compare(LUC, LUC, 3, 9, closed, case)
        assert report.agrees
        assert report.closed_form == report.oracle == Poly([0, 3, 0, 1])

    def test_disagreeing_report(self):
        report = compare(FIB, FIB, 4, 6, Poly([7]), GcdCase.FIB_STRONG)
        assert not report.agrees
        assert report.oracle == Poly([0, 1])

    def test_json_shape(self):
        report = GcdReport(3, 9, Poly([0, 1]), Poly([0, 1]), True, GcdCase.FIB_STRONG)
        assert report.to_json() == {
            "m": 3,
            "n": 9,
            "case_tag": "FibStrong",
            "closed_form": ["0", "1"],
            "oracle": ["0", "1"],
            "agrees": True,
        }


class TestMinEvenIndex:
    def test_paper_2x1(self):
        assert min_even_index(builtin_family("paper-2x1-lucas"), 12) == 3

    def test_families_without_even_gcd(self):
        # p0 = 1 families can never reach 2; the classical Lucas family has
        # odd-content terms throughout this range
        assert min_even_index(builtin_family("chebyshev1"), 24) is None
        assert min_even_index(builtin_family("lucas"), 24) is None

    def test_jacobsthal_lucas(self):
        # terms have constant coefficient 1, so the gcd with p0 = 2 stays 1
        assert min_even_index(builtin_family("jacobsthal-lucas"), 24) is None

    def test_multiples_characterization(self):
        # where the minimum exists, gcd(L[n], p0) = 2 exactly at its multiples
        f = builtin_family("paper-2x1-lucas")
        k = min_even_index(f, 12)
        for n in range(1, 25):
            expect = Poly([2]) if n % k == 0 else ONE
            assert gcd_with_initial(f, n) == expect, n

    def test_preconditions(self):
        with pytest.raises(ValueError):
            min_even_index(FIB, 10)
        with pytest.raises(ValueError):
            min_even_index(LUC, 0)


class TestStrongDivisibilityCharacterization:
    def test_divisibility_ladder(self):
        # m | n forces F[m] | F[n]; the quotient has integer coefficients
        from gfpoly.polyring import exact_div
        t = sequence(FIB).term
        for m in range(1, 7):
            for k in range(1, 5):
                assert exact_div(t(m * k), t(m)) is not None, (m, k)

    def test_gcd_index_reduction(self):
        # gcd runs through index gcd even when m, n are coprime to each other
        for m in range(1, 10):
            for n in range(1, 10):
                if math.gcd(m, n) == 1:
                    assert oracle_gcd(FIB, FIB, m, n) == ONE, (m, n)


def test_module_doctests():
    failures, _ = doctest.testmod(gcd_theorems_module)
    assert failures == 0

import random

import pytest

from homalt.core import HomAlgebra, apply_alpha, mul, random_element
from homalt.linalg import identity_matrix, qq
from homalt.powers import (
    PowerTable,
    check_nth_hom_power_associative,
    check_power_associativity_polarized,
    check_third_fourth_criterion,
    hom_power,
    hom_power_pair,
)




def diagonal_associative():
    """dim-3 commutative associative algebra: e_i e_j = delta_ij e_i, alpha = Id."""
    mu = [[[qq(1) if i == j == k else qq(0) for k in range(3)] for j in range(3)]
          for i in range(3)]
    return HomAlgebra(3, ("p", "q", "r"), mu, identity_matrix(3))


# -- the recursion, transcribed straight-line ------------------------------------


def test_hom_power_against_straight_line_recursion(twisted):
    rng = random.Random(6)
    for _ in range(5):
        x = random_element(twisted, rng)
        x2 = mul(twisted, x, x)
        x3 = mul(twisted, x2, apply_alpha(twisted, x))
        a2x = apply_alpha(twisted, apply_alpha(twisted, x))
        x4 = mul(twisted, x3, a2x)
        x5 = mul(twisted, x4, apply_alpha(twisted, a2x))
        x6 = mul(twisted, x5, apply_alpha(twisted, apply_alpha(twisted, a2x)))
        assert hom_power(twisted, x, 1) == x
        assert hom_power(twisted, x, 2) == x2
        assert hom_power(twisted, x, 3) == x3
        assert hom_power(twisted, x, 4) == x4
        assert hom_power(twisted, x, 5) == x5
        assert hom_power(twisted, x, 6) == x6


def test_hom_power_pair_definition(a230):
    rng = random.Random(8)
    x = random_element(a230, rng)
    t = PowerTable(a230, x)
    for i in range(1, 5):
        for j in range(1, 5):
            want = mul(
                a230,
                t.alpha_power(i, j - 1),
                t.alpha_power(j, i - 1),
            )
            assert t.pair(i, j) == want
            assert hom_power_pair(a230, x, i, j) == want


def test_pair_with_one_is_the_power(a230):
    rng = random.Random(10)
    for _ in range(5):
        t = PowerTable(a230, random_element(a230, rng))
        for n in range(2, 9):
            assert t.pair(n - 1, 1) == t.power(n)


def test_power_table_guards(a230):
    t = PowerTable(a230, a230.basis_element(0))
    with pytest.raises(ValueError):
        t.power(0)
    with pytest.raises(ValueError):
        t.pair(0, 1)


# -- power associativity across every split ----------------------------------------


def test_all_pairs_agree_on_twisted(twisted):
    rng = random.Random(12)
    for _ in range(10):
        t = PowerTable(twisted, random_element(twisted, rng))
        for n in range(2, 9):
            xn = t.power(n)
            for i in range(1, n):
                assert t.pair(n - i, i) == xn


def test_induction_identity(twisted):
    # 2 x^{n-(i+1), i+1} = x^n + x^{n-i, i} for 1 <= i <= n-2
    rng = random.Random(14)
    for _ in range(5):
        t = PowerTable(twisted, random_element(twisted, rng))
        for n in range(3, 9):
            for i in range(1, n - 1):
                lhs = t.pair(n - (i + 1), i + 1).scale(qq(2))
                rhs = t.power(n) + t.pair(n - i, i)
                assert lhs == rhs


def test_alpha_commutes_with_powers(twisted):
    rng = random.Random(16)
    for _ in range(5):
        x = random_element(twisted, rng)
        for n in range(1, 7):
            assert apply_alpha(twisted, hom_power(twisted, x, n)) == hom_power(
                twisted, apply_alpha(twisted, x), n
            )


def test_checkers_pass_on_twisted(twisted):
    for n in range(2, 9):
        assert check_nth_hom_power_associative(twisted, n, samples=10, seed=0).passed
    for n in range(2, 6):
        assert check_power_associativity_polarized(twisted, n).passed
    assert check_third_fourth_criterion(twisted).passed


def test_classical_associative_algebra_power_associative():
    A = diagonal_associative()
    for n in range(2, 7):
        assert check_nth_hom_power_associative(A, n).passed
    for n in range(2, 6):
        assert check_power_associativity_polarized(A, n).passed
    assert check_third_fourth_criterion(A).passed


# -- failures ------------------------------------------------------------------------


def test_fixture_fails_small_powers(bad_algebra):
    assert check_nth_hom_power_associative(bad_algebra, 2).passed  # trivially
    rep3 = check_nth_hom_power_associative(bad_algebra, 3)
    assert not rep3.passed
    x, i = rep3.witness
    assert i == 2
    t = PowerTable(bad_algebra, x)
    assert t.pair(1, 2) != t.power(3)  # the witness really witnesses
    assert rep3.lhs == t.power(3) and rep3.rhs == t.pair(1, 2)
    assert not check_nth_hom_power_associative(bad_algebra, 4).passed
    assert not check_power_associativity_polarized(bad_algebra, 3).passed


def test_fixture_witness_reproducible(bad_algebra):
    a = check_nth_hom_power_associative(bad_algebra, 3)
    b = check_nth_hom_power_associative(bad_algebra, 3)
    assert a.witness == b.witness
    assert repr(a.witness[0]) == "3/2*a + 3/2*b - 3/2*c"


def test_fixture_fails_third_fourth(bad_algebra):
    rep = check_third_fourth_criterion(bad_algebra)
    assert not rep.passed
    x, tag = rep.witness
    assert tag == "third"
    # the third-power criterion x^2 alpha(x) = alpha(x) x^2 fails at x
    x2 = mul(bad_algebra, x, x)
    ax = apply_alpha(bad_algebra, x)
    assert mul(bad_algebra, x2, ax) != mul(bad_algebra, ax, x2)


def test_checker_guards(a230, non_multiplicative):
    with pytest.raises(ValueError):
        check_nth_hom_power_associative(a230, 0)
    with pytest.raises(ValueError, match="multiplicative"):
        check_nth_hom_power_associative(non_multiplicative, 3)
    with pytest.raises(ValueError, match="multiplicative"):
        check_third_fourth_criterion(non_multiplicative)

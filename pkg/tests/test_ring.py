import math
import random

import pytest

from pstiefel.ring import (Residue, gcd_all, is_prime, lucas_binom,
                           p_adic_valuation, primes_upto)


class TestResidue:
    def test_normalizes_on_construction(self):
        assert Residue(10, 7).value == 3
        assert Residue(-1, 7).value == 6
        assert Residue(-9, 3).value == 0

    def test_integer_modulus_zero_keeps_value(self):
        assert Residue(-42, 0).value == -42

    def test_arithmetic(self):
        a, b = Residue(5, 7), Residue(4, 7)
        assert (a + b).value == 2
        assert (a - b).value == 1
        assert (a * b).value == 6
        assert (-a).value == 2

    def test_arithmetic_over_integers(self):
        a, b = Residue(5, 0), Residue(-8, 0)
        assert (a * b).value == -40
        assert (a + b).value == -3

    def test_modulus_mismatch_rejected(self):
        with pytest.raises(ValueError, match="modulus mismatch"):
            Residue(1, 3) + Residue(1, 5)

    def test_invalid_modulus(self):
        with pytest.raises(ValueError):
            Residue(1, 1)
        with pytest.raises(ValueError):
            Residue(1, -3)

    def test_equality_against_ints(self):
        assert Residue(10, 7) == 3
        assert Residue(10, 7) == Residue(3, 7)
        assert Residue(3, 7) != Residue(3, 5)
        assert bool(Residue(7, 7)) is False
        assert int(Residue(9, 7)) == 2

    def test_hashable(self):
        assert len({Residue(3, 7), Residue(10, 7)}) == 1

    def test_repr(self):
        assert repr(Residue(3, 7)) == "3 (mod 7)"


def test_gcd_all_pinned_values():
    assert gcd_all([6, -10, 15]) == 1
    assert gcd_all([0, 0]) == 0
    assert gcd_all([7]) == 7
    with pytest.raises(ValueError):
        gcd_all([])


def test_p_adic_valuation():
    assert p_adic_valuation(2, 40) == 3
    assert p_adic_valuation(3, 7) == 0
    # sign is ignored: 250 = 2 * 5^3
    assert p_adic_valuation(5, -250) == 3
    with pytest.raises(ValueError, match="infinite"):
        p_adic_valuation(2, 0)
    with pytest.raises(ValueError):
        p_adic_valuation(1, 5)


class TestLucasBinom:
    def test_pinned_values(self):
        assert lucas_binom(10, 4, 3) == 0  # C(10,4) = 210 = 2*3*5*7
        assert lucas_binom(17, 0, 5) == 1
        assert lucas_binom(5, 4, 5) == 0

    def test_r_larger_than_n_vanishes(self):
        assert lucas_binom(4, 9, 7) == 0

    def test_requires_prime_modulus(self):
        with pytest.raises(ValueError, match="not prime"):
            lucas_binom(5, 2, 6)

    def test_rejects_negative_arguments(self):
        with pytest.raises(ValueError):
            lucas_binom(-1, 0, 3)

    def test_matches_direct_binomials(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randrange(0, 400)
            r = rng.randrange(0, 400)
            p = rng.choice([2, 3, 5, 7, 11, 13])
            assert lucas_binom(n, r, p) == math.comb(n, r) % p


def test_primes_upto():
    assert primes_upto(10) == [2, 3, 5, 7]
    assert primes_upto(1) == []
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(2) == [2]


def test_is_prime_agrees_with_sieve():
    table = set(primes_upto(500))
    for n in range(-3, 501):
        assert is_prime(n) == (n in table)

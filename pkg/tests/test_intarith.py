"""intarith: spec examples, brute-force oracles and number-theoretic invariants."""

from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from biquadeuclid.intarith import (crt, in_A_plus, is_power_of_two, is_prime, jacobi,
                                   primes_in_progression, primes_up_to, sqrt_mod_prime)
from oracles import brute_A_plus, brute_crt, brute_is_residue

SMALL_PRIMES = primes_up_to(200)
ODD_PRIMES = [p for p in SMALL_PRIMES if p > 2]


# -- spec examples -------------------------------------------------------------

def test_jacobi_examples():
    assert jacobi(29, 37) == -1          # [PAPER] Table 1 row (29,37,97)
    assert jacobi(39, 53) == -1          # [DERIVED] brute force below
    assert not brute_is_residue(39, 53)
    for n in (1, 3, 9, 15, 221):
        assert jacobi(1, n) == 1


def test_jacobi_rejects_even_or_nonpositive_modulus():
    for n in (0, -3, 2, 8):
        with pytest.raises(ValueError):
            jacobi(3, n)


def test_jacobi_is_zero_exactly_on_common_factor():
    for n in range(1, 200, 2):
        for a in range(-30, 60):
            assert (jacobi(a, n) == 0) == (gcd(a, n) != 1)


def test_sqrt_mod_prime_examples():
    assert sqrt_mod_prime(29, 53) in (20, 33)
    assert sqrt_mod_prime(29, 53) == 20      # the smaller root
    assert 20 * 20 % 53 == 29
    for p in ODD_PRIMES[1:]:
        assert sqrt_mod_prime(4, p) == 2
    assert sqrt_mod_prime(2, 3) is None


def test_sqrt_mod_prime_rejects_bad_input():
    with pytest.raises(ValueError):
        sqrt_mod_prime(2, 15)
    with pytest.raises(ValueError):
        sqrt_mod_prime(2, 2)
    with pytest.raises(ValueError):
        sqrt_mod_prime(14, 7)


def test_is_prime_examples():
    assert is_prime(97)
    assert not is_prime(1)
    assert not is_prime(3589)
    assert 3589 == 37 * 97


def test_is_prime_matches_sieve():
    sieve = set(primes_up_to(20000))
    assert all(is_prime(n) == (n in sieve) for n in range(20001))


def test_is_prime_strong_pseudoprimes():
    # strong pseudoprimes to several small bases, and large known primes
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321,
              3825123056546413051, 318665857834031151167461):
        assert not is_prime(n)
    assert is_prime(2**61 - 1) and is_prime(2**31 - 1) and is_prime(1000000007)


def test_is_prime_refuses_beyond_bound():
    with pytest.raises(ValueError):
        is_prime(2**89 - 1)


def test_in_A_plus_examples():
    assert in_A_plus(41) and 41 == 3**2 + 32
    assert in_A_plus(32)
    assert not in_A_plus(73)


def test_in_A_plus_matches_double_loop_below_1e4():
    assert all(in_A_plus(q) == brute_A_plus(q) for q in range(1, 10**4))


def test_is_power_of_two_examples():
    assert is_power_of_two(16) and is_power_of_two(1)
    assert not is_power_of_two(12)
    assert [n for n in range(1, 300) if is_power_of_two(n)] == [1, 2, 4, 8, 16, 32, 64, 128, 256]


def test_crt_examples():
    assert crt([1], [5]) == 1
    assert crt([3, 1], [4, 3]) == 7 == brute_crt([3, 1], [4, 3])
    assert crt([0, 1], [2, 3]) == 4 == brute_crt([0, 1], [2, 3])


def test_crt_rejects_non_coprime():
    with pytest.raises(ValueError):
        crt([1, 2], [4, 6])


def test_primes_in_progression():
    ps = list(primes_in_progression(3, 16, 5))
    assert ps == [3, 19, 67, 83, 131]
    assert list(primes_in_progression(3, 16, 2, start=20)) == [67, 83]


# -- invariants -------------------------------------------------------------------

@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6),
       st.integers(0, 10**5).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative(a, b, n):
    assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


@given(st.integers(-10**6, 10**6), st.integers(0, 10**4).map(lambda k: 2 * k + 1),
       st.integers(0, 10**4).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative_in_modulus(a, m, n):
    assert jacobi(a, m * n) == jacobi(a, m) * jacobi(a, n)


def test_jacobi_is_legendre_for_small_primes():
    for p in ODD_PRIMES[:25]:
        for a in range(1, p):
            assert (jacobi(a, p) == 1) == brute_is_residue(a, p)


def test_quadratic_reciprocity_exhaustive_below_200():
    for p in ODD_PRIMES:
        for q in ODD_PRIMES:
            if p != q:
                assert jacobi(p, q) * jacobi(q, p) == (-1) ** ((p - 1) * (q - 1) // 4)


def test_supplementary_laws():
    for p in ODD_PRIMES:
        assert jacobi(-1, p) == (-1) ** ((p - 1) // 2)
        assert jacobi(2, p) == (-1) ** ((p * p - 1) // 8)


@settings(max_examples=300)
@given(st.sampled_from(ODD_PRIMES + [10007, 65537, 1000003, 998244353]),
       st.integers(1, 10**9))
def test_sqrt_mod_prime_property(p, a):
    if a % p == 0:
        return
    s = sqrt_mod_prime(a, p)
    if jacobi(a, p) == -1:
        assert s is None
    else:
        assert s is not None and 0 < s < p
        assert s * s % p == a % p
        assert s <= p - s


@given(st.lists(st.sampled_from(SMALL_PRIMES[:15]), min_size=1, max_size=6, unique=True),
       st.data())
def test_crt_reduces_correctly(ps, data):
    moduli = [p ** data.draw(st.integers(1, 3)) for p in ps]
    residues = [data.draw(st.integers(-10**6, 10**6)) for _ in moduli]
    u = crt(residues, moduli)
    assert 0 <= u < prod(moduli)
    assert all(u % m == r % m for r, m in zip(residues, moduli))

"""localsym: Hilbert symbols over Q and the product formula."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from biquadeuclid.intarith import jacobi, primes_up_to
from biquadeuclid.localsym import REAL, Place, hilbert_symbol, product_over_places

PLACES = [REAL] + [Place(p) for p in primes_up_to(60)]

nonzero = st.integers(-10**4 + 1, 10**4 - 1).filter(bool)
rationals = st.builds(Fraction, nonzero, st.integers(1, 10**4 - 1))
places = st.sampled_from(PLACES)


def test_examples():
    assert hilbert_symbol(2, 2, Place(2)) == 1
    assert hilbert_symbol(2, 5, Place(7)) == 1
    assert hilbert_symbol(2, 3, Place(2)) == -1
    assert product_over_places(2, 3) == 1
    assert [hilbert_symbol(2, 3, v) for v in (Place(2), Place(3), REAL)] == [-1, -1, 1]
    assert product_over_places(-1, -1) == 1
    assert hilbert_symbol(-1, -1, REAL) == -1 and hilbert_symbol(-1, -1, Place(2)) == -1
    for b in (1, -7, Fraction(3, 5), 1000):
        assert product_over_places(1, b) == 1


def test_classical_values():
    # (p, p)_p = (-1/p); (-1, -1)_p = 1 for odd p; (5, 3)_3 = (5/3) = -1
    assert hilbert_symbol(3, 3, Place(3)) == -1
    assert hilbert_symbol(5, 5, Place(5)) == 1
    assert hilbert_symbol(-1, -1, Place(3)) == 1
    assert hilbert_symbol(5, 3, Place(3)) == -1
    assert hilbert_symbol(-1, 2, Place(2)) == 1
    assert hilbert_symbol(3, 7, Place(2)) == -1


def test_rejects_zero_and_bad_places():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 3, REAL)
    with pytest.raises(ValueError):
        product_over_places(3, Fraction(0))
    with pytest.raises(ValueError):
        Place(9)


def test_product_formula_500_random_pairs():
    rng = random.Random(500)

    def draw():
        n = rng.choice([-1, 1]) * rng.randrange(1, 10**4)
        return Fraction(n, rng.randrange(1, 10**4))

    for _ in range(500):
        a, b = draw(), draw()
        assert product_over_places(a, b) == 1, (a, b)


@settings(max_examples=300)
@given(rationals, rationals, rationals, places)
def test_bilinearity(a, a2, b, v):
    assert hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v)


@given(rationals, rationals, places)
def test_symmetry(a, b, v):
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)


@given(rationals, places)
def test_a_minus_a(a, v):
    assert hilbert_symbol(a, -a, v) == 1


@given(rationals, places)
def test_steinberg_relation(a, v):
    if a != 1:
        assert hilbert_symbol(a, 1 - a, v) == 1


@given(rationals, rationals, rationals, places)
def test_norms_have_trivial_symbol(a, x, y, v):
    # b = x^2 - a y^2 is a norm from Q(sqrt a), so (a, b) = 1 everywhere
    b = x * x - a * y * y
    if b != 0:
        assert hilbert_symbol(a, b, v) == 1


@given(rationals, rationals, places)
def test_squares_are_invisible(a, b, v):
    assert hilbert_symbol(a * b * b, 7, v) == hilbert_symbol(a, 7, v)


def _is_local_square(a: int, p: int) -> bool:
    k = 0
    while a % p == 0:
        a //= p
        k += 1
    if k % 2:
        return False
    return a % 8 == 1 if p == 2 else jacobi(a, p) == 1


def _square_class_generators(p: int) -> list[int]:
    if p == 2:
        return [-1, 2, 5]
    n = next(x for x in range(2, p) if jacobi(x, p) == -1)
    return [p, n]


def test_nondegenerate_at_small_primes():
    # a is a local square iff it pairs trivially with every square class
    for p in primes_up_to(40):
        for a in range(-60, 61):
            if a == 0:
                continue
            trivial = all(hilbert_symbol(a, b, Place(p)) == 1
                          for b in _square_class_generators(p))
            assert trivial == _is_local_square(a, p), (a, p)

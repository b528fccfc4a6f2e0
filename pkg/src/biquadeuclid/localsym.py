"""Hilbert symbols of Q at finite primes and at the real place."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .intarith import is_prime, jacobi, prime_factors

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Place:
    """A place of Q: a prime p, or the real place when p is None."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"finite place needs a prime, got {self.p}")

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "inf" if self.p is None else str(self.p)


REAL = Place()


def _as_integer(x: Rational) -> int:
    # num/den and num*den differ by a square, which the symbol ignores
    x = Fraction(x)
    if x == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    return x.numerator * x.denominator


def _split(x: int, p: int) -> tuple[int, int]:
    """x = p^k * u with p not dividing u; returns (k, u)."""
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k, x


def hilbert_symbol(a: Rational, b: Rational, place: Place) -> int:
    a, b = _as_integer(a), _as_integer(b)
    if place.is_real:
        return -1 if a < 0 and b < 0 else 1
    p = place.p
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    # bilinear expansion of (p^alpha u, p^beta v)
    if p == 2:
        pp = 1
        pu = 1 if u % 8 in (1, 7) else -1
        pv = 1 if v % 8 in (1, 7) else -1
        uv = -1 if u % 4 == 3 and v % 4 == 3 else 1
    else:
        pp = 1 if p % 4 == 1 else -1
        pu = jacobi(u, p)
        pv = jacobi(v, p)
        uv = 1
    out = uv
    if alpha % 2 and beta % 2:
        out *= pp
    if alpha % 2:
        out *= pv
    if beta % 2:
        out *= pu
    return out


def product_over_places(a: Rational, b: Rational) -> int:
    """Product of the symbol over every place; +1 by the product formula."""
    ia, ib = _as_integer(a), _as_integer(b)
    primes = set(prime_factors(2 * ia * ib))
    out = hilbert_symbol(a, b, REAL)
    for p in sorted(primes):
        out *= hilbert_symbol(a, b, Place(p))
    return out

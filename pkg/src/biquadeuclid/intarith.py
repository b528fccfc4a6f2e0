"""Exact integer primitives: Jacobi symbol, modular square roots, primality, CRT.

Everything here works on plain Python ints, so there is no overflow at any size.
"""

from __future__ import annotations

from math import gcd, isqrt
from typing import Iterable, Optional, Sequence

# The first 13 primes form a complete Miller-Rabin witness set below this bound.
MR_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1; the Legendre symbol when n is prime."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < MR_BOUND."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= MR_BOUND:
        raise ValueError(f"{n} is beyond the deterministic primality bound")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sqrt_mod_prime(a: int, p: int) -> Optional[int]:
    """Square root of a modulo an odd prime p by Tonelli-Shanks.

    Returns the smaller of the two roots, or None when a is a non-residue.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p}")
    a %= p
    if a == 0:
        raise ValueError(f"{p} divides the argument")
    if jacobi(a, p) == -1:
        return None
    return tonelli_shanks(a, p)


def tonelli_shanks(a: int, p: int) -> int:
    """Root of a quadratic residue a (0 < a < p) modulo an odd prime p, unchecked."""
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def in_A_plus(q: int) -> bool:
    """True iff q = a^2 + 32 b^2 for some integers a, b."""
    if q < 1:
        raise ValueError("q must be positive")
    b = 0
    while 32 * b * b <= q:
        if is_square(q - 32 * b * b):
            return True
        b += 1
    return False


def is_power_of_two(n: int) -> bool:
    if n < 1:
        raise ValueError("n must be positive")
    return n & (n - 1) == 0


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Least nonnegative u with u = r_i (mod m_i) for pairwise coprime m_i."""
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli differ in length")
    for i, m in enumerate(moduli):
        if m < 1:
            raise ValueError(f"modulus {m} is not positive")
        for m2 in moduli[i + 1:]:
            if gcd(m, m2) != 1:
                raise ValueError(f"moduli {m} and {m2} are not coprime")
    u, mod = 0, 1
    for r, m in zip(residues, moduli):
        # lift u so it also satisfies u = r (mod m)
        k = (r - u) * pow(mod, -1, m) % m
        u += k * mod
        mod *= m
    return u % mod


def lcm(*args: int) -> int:
    out = 1
    for a in args:
        out = out * a // gcd(out, a)
    return out


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of |n| by trial division (small inputs only)."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, v in enumerate(sieve) if v]


def primes_in_progression(u: int, l: int, count: int, start: int = 0) -> Iterable[int]:
    """Yield the first `count` primes p = u (mod l) with p >= start."""
    p = u % l
    if p < start:
        p += (start - p + l - 1) // l * l
    found = 0
    while found < count:
        if is_prime(p):
            yield p
            found += 1
        p += l

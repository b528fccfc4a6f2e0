"""Invariants of real quadratic fields Q(sqrt(m)).

Class numbers come from cycles of reduced indefinite binary quadratic forms
of the field discriminant; the fundamental unit comes from the continued
fraction of the generator of the maximal order. Both are integer-only.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .intarith import (is_prime, is_squarefree, jacobi, primes_up_to, sqrt_mod_prime,
                       tonelli_shanks)


@dataclass(frozen=True)
class QuadUnit:
    """The unit (a + b*sqrt(m)) / denom."""

    a: int
    b: int
    denom: int
    m: int
    norm: int

    def __post_init__(self):
        if self.a * self.a - self.m * self.b * self.b != self.norm * self.denom**2:
            raise ValueError(f"norm identity fails for {self}")
        if self.denom == 2 and not (self.m % 4 == 1 and (self.a - self.b) % 2 == 0):
            raise ValueError(f"half-integral unit outside Z[(1+sqrt(m))/2]: {self}")
        if self.denom not in (1, 2) or self.a <= 0 or self.b <= 0:
            raise ValueError(f"not a unit > 1 in normal form: {self}")

    def __float__(self) -> float:
        return (self.a + self.b * self.m**0.5) / self.denom

    def render(self) -> str:
        rad = f"sqrt({self.m})" if self.b == 1 else f"{self.b}*sqrt({self.m})"
        body = f"{self.a}+{rad}"
        return f"({body})/2" if self.denom == 2 else body


@dataclass(frozen=True)
class QuadFieldData:
    m: int
    D: int
    h: int
    h_narrow: int
    unit_norm: int


def _check_radicand(m: int) -> None:
    if not isinstance(m, int) or m <= 1 or not is_squarefree(m):
        raise ValueError(f"radicand must be a squarefree integer > 1, got {m!r}")


def conductor_quad(m: int) -> int:
    """Conductor (= discriminant) of Q(sqrt(m))."""
    _check_radicand(m)
    return m if m % 4 == 1 else 4 * m


# -- continued fractions ----------------------------------------------------

def _cf_start(m: int) -> tuple[int, int]:
    # omega = (P0 + sqrt(m)) / Q0 generates the maximal order
    return (1, 2) if m % 4 == 1 else (0, 1)


def _cf_states(m: int):
    """Yield (k, a_k, P_{k+1}, Q_{k+1}) for the expansion of omega."""
    s = isqrt(m)
    P, Q = _cf_start(m)
    k = 0
    while True:
        a = (P + s) // Q
        P = a * Q - P
        Q = (m - P * P) // Q
        yield k, a, P, Q
        k += 1


@lru_cache(maxsize=None)
def unit_norm(m: int) -> int:
    """Norm of the fundamental unit, from the period parity alone."""
    _check_radicand(m)
    Q0 = _cf_start(m)[1]
    for k, _, _, Q in _cf_states(m):
        if Q == Q0:
            return -1 if (k + 1) % 2 else 1
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def fundamental_unit(m: int) -> QuadUnit:
    """Least unit > 1 of the maximal order of Q(sqrt(m))."""
    _check_radicand(m)
    Q0 = _cf_start(m)[1]
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    for k, a, _, Q in _cf_states(m):
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        if Q == Q0:
            norm = -1 if (k + 1) % 2 else 1
            break
    # the unit is p - q * conj(omega)
    if Q0 == 1:
        return QuadUnit(p, q, 1, m, norm)
    a2, b2 = 2 * p - q, q
    if b2 % 2 == 0:
        return QuadUnit(a2 // 2, b2 // 2, 1, m, norm)
    return QuadUnit(a2, b2, 2, m, norm)


# -- reduced indefinite forms ------------------------------------------------

def _roots_mod_prime_power(D: int, p: int, k: int, r: int | None) -> list[int]:
    """All x mod p^k with x^2 = D (mod p^k), p odd, given a root r mod p."""
    if D % p == 0:
        # D has at most one factor of an odd p
        return [0] if k == 1 else []
    if r is None:
        return []
    pk = p
    for _ in range(k - 1):
        pk *= p
        # Hensel step; 2r is a unit mod p
        r = (r - (r * r - D) * pow(2 * r, -1, pk)) % pk
    return sorted({r, (-r) % pk})


def reduced_forms(D: int) -> list[tuple[int, int, int]]:
    """All reduced forms (a, b, c) of discriminant D > 0.

    Reduced means |sqrt(D) - 2|a|| < b < sqrt(D). For each |a| we only visit
    the residues b mod 2a with b^2 = D (mod 4a).
    """
    s = isqrt(D)
    if s * s == D:
        raise ValueError("discriminant must not be a square")
    odd_primes = primes_up_to(s)[1:]

    # b mod 2^(e+1) with b^2 = D mod 2^(e+2)
    two_roots: list[list[int]] = []
    e = 0
    while (1 << e) <= s:
        mod, big = 1 << (e + 1), 1 << (e + 2)
        two_roots.append([t for t in range(mod) if (t * t - D) % big == 0])
        e += 1

    forms = []
    root_cache: dict[tuple[int, int], list[int]] = {}

    def roots_mod(p: int, k: int) -> list[int]:
        key = (p, k)
        if key not in root_cache:
            r = None
            if D % p and jacobi(D, p) == 1:
                r = tonelli_shanks(D % p, p)
            root_cache[key] = _roots_mod_prime_power(D, p, k, r)
        return root_cache[key]

    def emit(o: int, odd_res: list[int]) -> None:
        e = 0
        while (o << e) <= s:
            a = o << e
            mod2 = 1 << (e + 1)
            two = two_roots[e]
            if two:
                # combine b = t (mod 2^(e+1)) and b = r (mod o)
                inv = pow(mod2, -1, o) if o > 1 else 0
                for t in two:
                    for r in odd_res:
                        res = t + mod2 * ((r - t) * inv % o) if o > 1 else t
                        b = s - (s - res) % (2 * a)
                        while b > 0:
                            X = D + 4 * a * a - b * b
                            if X >= 0 and 16 * a * a * D <= X * X:
                                break
                            c = (b * b - D) // (4 * a)
                            forms.append((a, b, c))
                            forms.append((-a, b, -c))
                            b -= 2 * a
            e += 1

    def dfs(o: int, odd_res: list[int], start: int) -> None:
        emit(o, odd_res)
        for i in range(start, len(odd_primes)):
            p = odd_primes[i]
            if o * p > s:
                break
            pk, k = p, 1
            while o * pk <= s:
                roots = roots_mod(p, k)
                if not roots:
                    break
                if o == 1:
                    combined = roots
                else:
                    inv = pow(o, -1, pk)
                    combined = [r + o * ((x - r) * inv % pk) for r in odd_res for x in roots]
                dfs(o * pk, combined, i + 1)
                pk *= p
                k += 1

    dfs(1, [0], 0)
    return forms


def _rho(f: tuple[int, int, int], D: int, s: int) -> tuple[int, int, int]:
    a, b, c = f
    two_c = 2 * abs(c)
    # largest b' < sqrt(D) with b' = -b (mod 2|c|)
    b2 = s - (s + b) % two_c
    return (c, b2, (b2 * b2 - D) // (4 * c))


def form_cycles(D: int) -> list[list[tuple[int, int, int]]]:
    """Partition the reduced forms of discriminant D into rho-cycles."""
    s = isqrt(D)
    forms = reduced_forms(D)
    seen = set()
    cycles = []
    for f in forms:
        if f in seen:
            continue
        cycle = []
        g = f
        while g not in seen:
            seen.add(g)
            cycle.append(g)
            g = _rho(g, D, s)
        cycles.append(cycle)
    return cycles


@lru_cache(maxsize=None)
def narrow_class_number(m: int) -> int:
    """Number of proper classes of forms of discriminant D = number of cycles."""
    return len(form_cycles(conductor_quad(m)))


@lru_cache(maxsize=None)
def class_number(m: int) -> int:
    hn = narrow_class_number(m)
    return hn if unit_norm(m) == -1 else hn // 2


def quad_field(m: int) -> QuadFieldData:
    return QuadFieldData(m, conductor_quad(m), class_number(m),
                         narrow_class_number(m), unit_norm(m))


def unit_residue_symbol(p1: int, q: int) -> int:
    """Legendre symbol of the fundamental unit of Q(sqrt(p1)) modulo a prime above q.

    Needs q = 1 (mod 4); otherwise the value depends on which prime above q
    is taken.
    """
    if not (is_prime(p1) and p1 % 4 == 1):
        raise ValueError(f"p1 must be a prime = 1 (mod 4), got {p1}")
    if not (is_prime(q) and q % 4 == 1):
        raise ValueError(f"q must be a prime = 1 (mod 4), got {q}")
    if q == p1 or jacobi(p1, q) != 1:
        raise ValueError(f"{q} does not split in Q(sqrt({p1}))")
    eps = fundamental_unit(p1)
    s = sqrt_mod_prime(p1, q)
    return _unit_symbol_with_root(eps, q, s)


def _unit_symbol_with_root(eps: QuadUnit, q: int, s: int) -> int:
    x = (eps.a + eps.b * s) * pow(eps.denom, -1, q) % q
    return jacobi(x, q)

"""Exact arithmetic in K = Q(sqrt(m1), sqrt(m2)), the unit index Q(K) and h_K.

Elements are x0 + x1*sqrt(m1) + x2*sqrt(m2) + x3*sqrt(m3) with rational
coordinates, m3 = m1*m2/g^2 and g = gcd(m1, m2). Square roots are found by
descending K -> Q(sqrt(m1)) -> Q through relative norms, then checked by
squaring, so no floating point is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .genus import BiquadTriple
from .quadfield import QuadUnit, class_number, fundamental_unit

# (x0, x1) meaning x0 + x1*sqrt(m)
QuadElt = tuple[Fraction, Fraction]


def radicand3(m1: int, m2: int) -> int:
    g = gcd(m1, m2)
    return m1 * m2 // (g * g)


@dataclass(frozen=True)
class BiquadElement:
    m1: int
    m2: int
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        if self.m1 <= 1 or self.m2 <= 1 or self.m1 == self.m2:
            raise ValueError(f"bad radicands {self.m1}, {self.m2}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def m3(self) -> int:
        return radicand3(self.m1, self.m2)

    @classmethod
    def rational(cls, m1: int, m2: int, x) -> "BiquadElement":
        return cls(m1, m2, (x, 0, 0, 0))

    @classmethod
    def from_quad_unit(cls, m1: int, m2: int, u: QuadUnit) -> "BiquadElement":
        x = [Fraction(u.a, u.denom), 0, 0, 0]
        radicands = (m1, m2, radicand3(m1, m2))
        if u.m not in radicands:
            raise ValueError(f"Q(sqrt({u.m})) is not a subfield")
        x[1 + radicands.index(u.m)] = Fraction(u.b, u.denom)
        return cls(m1, m2, tuple(x))

    def _same_field(self, other: "BiquadElement") -> None:
        if (self.m1, self.m2) != (other.m1, other.m2):
            raise ValueError("elements live in different fields")

    def __add__(self, other: "BiquadElement") -> "BiquadElement":
        self._same_field(other)
        return BiquadElement(self.m1, self.m2,
                             tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "BiquadElement":
        return BiquadElement(self.m1, self.m2, tuple(-a for a in self.coords))

    def __mul__(self, other: "BiquadElement") -> "BiquadElement":
        self._same_field(other)
        m1, m2, m3 = self.m1, self.m2, self.m3
        g = gcd(m1, m2)
        a0, a1, a2, a3 = self.coords
        b0, b1, b2, b3 = other.coords
        # r1*r2 = g*r3, r1*r3 = (m1/g)*r2, r2*r3 = (m2/g)*r1
        c0 = a0 * b0 + m1 * a1 * b1 + m2 * a2 * b2 + m3 * a3 * b3
        c1 = a0 * b1 + a1 * b0 + (m2 // g) * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + (m1 // g) * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + g * (a1 * b2 + a2 * b1)
        return BiquadElement(m1, m2, (c0, c1, c2, c3))

    def __pow__(self, n: int) -> "BiquadElement":
        out = BiquadElement.rational(self.m1, self.m2, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def tower(self) -> tuple[QuadElt, QuadElt]:
        """(alpha, beta) in Q(sqrt(m1)) with self = alpha + beta*sqrt(m2)."""
        x0, x1, x2, x3 = self.coords
        g = gcd(self.m1, self.m2)
        return (x0, x1), (x2, x3 / g)

    @classmethod
    def from_tower(cls, m1: int, m2: int, alpha: QuadElt, beta: QuadElt) -> "BiquadElement":
        g = gcd(m1, m2)
        return cls(m1, m2, (alpha[0], alpha[1], beta[0], beta[1] * g))

    def signs(self) -> tuple[int, int, int, int]:
        """Exact signs under the embeddings (s1, s2) = (+,+), (+,-), (-,+), (-,-)."""
        alpha, beta = self.tower()
        out = []
        for s1 in (1, -1):
            a = (alpha[0], s1 * alpha[1])
            b = (beta[0], s1 * beta[1])
            for s2 in (1, -1):
                out.append(_sign_rel(a, (s2 * b[0], s2 * b[1]), self.m1, self.m2))
        return tuple(out)

    def is_totally_positive(self) -> bool:
        return all(s > 0 for s in self.signs())


# -- Q(sqrt(m)) helpers --------------------------------------------------------

def _sign_quad(x: QuadElt, m: int) -> int:
    """Sign of x0 + x1*sqrt(m) as a real number."""
    x0, x1 = x
    s0 = (x0 > 0) - (x0 < 0)
    s1 = (x1 > 0) - (x1 < 0)
    if s0 == s1 or s1 == 0:
        return s0
    if s0 == 0:
        return s1
    # opposite signs: compare x0^2 with m*x1^2
    diff = x0 * x0 - m * x1 * x1
    return s0 if diff > 0 else s1


def _sign_rel(alpha: QuadElt, beta: QuadElt, m1: int, m2: int) -> int:
    """Sign of alpha + beta*sqrt(m2) for alpha, beta in Q(sqrt(m1)) (already embedded)."""
    sa = _sign_quad(alpha, m1)
    sb = _sign_quad(beta, m1)
    if sa == sb or sb == 0:
        return sa
    if sa == 0:
        return sb
    diff = _qsub(_qmul(alpha, alpha, m1), _qscale(_qmul(beta, beta, m1), m2))
    sd = _sign_quad(diff, m1)
    return sa if sd > 0 else sb


def _qmul(x: QuadElt, y: QuadElt, m: int) -> QuadElt:
    return (x[0] * y[0] + m * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _qsub(x: QuadElt, y: QuadElt) -> QuadElt:
    return (x[0] - y[0], x[1] - y[1])


def _qscale(x: QuadElt, c) -> QuadElt:
    return (x[0] * c, x[1] * c)


def _qinv(x: QuadElt, m: int) -> QuadElt:
    n = x[0] * x[0] - m * x[1] * x[1]
    return (x[0] / n, -x[1] / n)


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt_quad(x: QuadElt, m: int) -> Optional[QuadElt]:
    """A square root of x in Q(sqrt(m)), or None."""
    a, b = Fraction(x[0]), Fraction(x[1])
    if b == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return (r, Fraction(0))
        r = _rational_sqrt(a / m)
        return (Fraction(0), r) if r is not None else None
    n = _rational_sqrt(a * a - m * b * b)
    if n is None:
        return None
    for c2 in ((a + n) / 2, (a - n) / 2):
        c = _rational_sqrt(c2)
        if c:
            root = (c, b / (2 * c))
            if _qmul(root, root, m) == (a, b):
                return root
    return None


def sqrt_in_K(x: BiquadElement) -> Optional[BiquadElement]:
    """Some y in K with y*y == x, or None."""
    m1, m2 = x.m1, x.m2
    alpha, beta = x.tower()
    candidates = []
    if beta == (0, 0):
        # x in Q(sqrt(m1)): root is gamma or delta*sqrt(m2)
        g = _sqrt_quad(alpha, m1)
        if g is not None:
            candidates.append((g, (Fraction(0), Fraction(0))))
        d = _sqrt_quad(_qscale(alpha, Fraction(1, m2)), m1)
        if d is not None:
            candidates.append(((Fraction(0), Fraction(0)), d))
    else:
        # (gamma + delta r2)^2 = alpha + beta r2 forces gamma^2 = (alpha +- nu)/2
        nu = _sqrt_quad(_qsub(_qmul(alpha, alpha, m1), _qscale(_qmul(beta, beta, m1), m2)), m1)
        if nu is not None:
            for sgn in (1, -1):
                g2 = _qscale((alpha[0] + sgn * nu[0], alpha[1] + sgn * nu[1]), Fraction(1, 2))
                gamma = _sqrt_quad(g2, m1)
                if gamma is None or gamma == (0, 0):
                    continue
                delta = _qmul(beta, _qinv(_qscale(gamma, 2), m1), m1)
                candidates.append((gamma, delta))
    for gamma, delta in candidates:
        y = BiquadElement.from_tower(m1, m2, gamma, delta)
        if y * y == x:
            return y
    return None


def is_square_in_K(x: BiquadElement) -> bool:
    if x.is_zero():
        return True
    if not x.is_totally_positive():
        raise ValueError("element has a negative embedding; its root is not real")
    return sqrt_in_K(x) is not None


# -- unit index and Kuroda's formula ---------------------------------------

@dataclass(frozen=True)
class UnitIndexResult:
    Q: int
    square_products: frozenset[tuple[int, int, int]]


def _vec_sum(u, v):
    return tuple((a + b) % 2 for a, b in zip(u, v))


def unit_index(m1: int, m2: int) -> UnitIndexResult:
    """Index of <-1, e0, e1, e2> in the unit group of K.

    Every unit of K squares into that subgroup, so the index is 2^r with r
    the rank of {e in F2^3 : +-e0^a e1^b e2^c is a square in K}.
    """
    m3 = radicand3(m1, m2)
    units = [fundamental_unit(m) for m in (m1, m2, m3)]
    elts = [BiquadElement.from_quad_unit(m1, m2, u) for u in units]
    # signs of each subfield unit in the embeddings (+,+), (+,-), (-,+), (-,-)
    sign_rows = [
        (1, 1, units[0].norm, units[0].norm),
        (1, units[1].norm, 1, units[1].norm),
        (1, units[2].norm, units[2].norm, 1),
    ]
    squares = set()
    for e in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)][1:]:
        signs = [1, 1, 1, 1]
        for i, bit in enumerate(e):
            if bit:
                signs = [s * t for s, t in zip(signs, sign_rows[i])]
        # a real square is totally positive; -x is never, as x > 0 at (+,+)
        if any(s < 0 for s in signs):
            continue
        x = BiquadElement.rational(m1, m2, 1)
        for i, bit in enumerate(e):
            if bit:
                x = x * elts[i]
        if sqrt_in_K(x) is not None:
            squares.add(e)
    group = squares | {(0, 0, 0)}
    for u in group:
        for v in group:
            if _vec_sum(u, v) not in group:
                raise AssertionError(f"square products not closed: {sorted(squares)}")
    Q = len(group)
    if Q not in (1, 2, 4):
        raise AssertionError(f"unit index {Q} outside {{1, 2, 4}}")
    return UnitIndexResult(Q, frozenset(squares))


@dataclass(frozen=True)
class KurodaResult:
    h_K: int
    Q: int
    h0: int
    h1: int
    h2: int


def kuroda(t: BiquadTriple) -> KurodaResult:
    m1, m2 = t.p1, t.d
    m3 = radicand3(m1, m2)
    h0, h1, h2 = class_number(m1), class_number(m2), class_number(m3)
    Q = unit_index(m1, m2).Q
    num = Q * h0 * h1 * h2
    if num % 4:
        raise AssertionError(f"Kuroda numerator {num} not divisible by 4 for {t}")
    return KurodaResult(num // 4, Q, h0, h1, h2)


def class_number_biquad(t: BiquadTriple) -> int:
    return kuroda(t).h_K

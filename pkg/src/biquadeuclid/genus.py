"""When is the genus field of Q(sqrt(p1), sqrt(q1 q2)) equal to Q(sqrt(p1), sqrt(q1), sqrt(q2))?

The answer is a finite list of congruence and Legendre-symbol conditions,
split into six cases by the residues of p1 and d = q1 q2. Some conditions are
asymmetric in q1, q2, so every bullet is tried in both orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from . import quadfield
from .intarith import in_A_plus, is_prime, jacobi


class InvalidTriple(ValueError):
    pass


@dataclass(frozen=True)
class BiquadTriple:
    p1: int
    q1: int
    q2: int

    def __post_init__(self):
        for name in ("p1", "q1", "q2"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidTriple(f"{name} must be an integer, got {v!r}")
            if not is_prime(v):
                raise InvalidTriple(f"{name}={v} is not prime")
        if len({self.p1, self.q1, self.q2}) != 3:
            raise InvalidTriple(f"primes must be distinct: {self.as_tuple()}")

    @property
    def d(self) -> int:
        return self.q1 * self.q2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p1, self.q1, self.q2)

    def swapped(self) -> "BiquadTriple":
        return BiquadTriple(self.p1, self.q2, self.q1)

    def canonical(self) -> "BiquadTriple":
        return self if self.q1 < self.q2 else self.swapped()


@dataclass(frozen=True)
class GenusVerdict:
    elementary: bool
    case_label: int
    bullet: Optional[int]
    orientation: Optional[tuple[int, int]]

    def to_dict(self) -> dict:
        return {
            "elementary": self.elementary,
            "case": self.case_label,
            "bullet": self.bullet,
            "orientation": list(self.orientation) if self.orientation else None,
        }


def case_of(t: BiquadTriple) -> int:
    p1 = t.p1
    if p1 == 2:
        return 4
    two_in_d = 2 in (t.q1, t.q2)
    if p1 % 4 == 1:
        if two_in_d:
            return 2
        return 1 if t.d % 4 == 1 else 3
    return 6 if two_in_d else 5


def _leg(p: int, q: int) -> int:
    return jacobi(p, q)


def _unit_sym(p1: int, q: int) -> int:
    return quadfield.unit_residue_symbol(p1, q)


# Each bullet is a predicate on (p1, q1, q2) for one orientation. Conditions
# are ordered so the unit symbol is only reached when q1 = 1 (mod 4) and q1
# splits in Q(sqrt(p1)).

def _case1(p1, q1, q2):
    both_1 = q1 % 4 == 1 and q2 % 4 == 1
    return [
        both_1 and _leg(p1, q1) == -1 and _leg(p1, q2) == -1,
        both_1 and _leg(p1, q1) == 1 and _leg(p1, q2) == -1 and _unit_sym(p1, q1) == -1,
    ]


def _case2(p1, q1, _two):
    c = p1 % 8 == 5 and q1 % 4 == 1
    return [
        c and _leg(p1, q1) == -1,
        c and _leg(p1, q1) == 1 and _unit_sym(p1, q1) == -1,
    ]


def _case3(p1, q1, q2):
    l1, l2 = _leg(p1, q1), _leg(p1, q2)
    return [
        p1 % 8 == 1 and l1 == -1 and l2 == -1,
        p1 % 8 == 5 and l1 == -1 and l2 == -1,
        p1 % 8 == 5 and l1 == 1 and l2 == -1 and q1 % 4 == 3,
    ]


def _case4(_two, q1, q2):
    r1, r2 = q1 % 8, q2 % 8
    return [
        r1 == 5 and r2 == 5,
        r1 == 1 and r2 == 5 and not in_A_plus(q1),
        r1 == 5 and r2 == 3,
        r1 == 7 and r2 == 5,
    ]


def _case5(p1, q1, q2):
    l1, l2 = _leg(p1, q1), _leg(p1, q2)
    return [
        l1 == -1 and l2 == -1,
        l1 == 1 and l2 == -1 and q1 % 8 != 1,
        # the last congruence is on the product q1*q2
        l1 == 1 and l2 == 1 and q1 % 8 != 1 and q2 % 8 != 1 and (q1 * q2) % 8 in (5, 7),
    ]


def _case6(p1, q1, _two):
    l1 = _leg(p1, q1)
    return [l1 == -1, l1 == 1 and q1 % 8 != 1]


_CASES: dict[int, Callable] = {1: _case1, 2: _case2, 3: _case3, 4: _case4, 5: _case5, 6: _case6}


def _orientations(t: BiquadTriple, case: int) -> list[tuple[int, int]]:
    if case in (2, 6):
        # d = 2 q1 with q1 the odd prime
        odd = t.q2 if t.q1 == 2 else t.q1
        return [(odd, 2)]
    return [(t.q1, t.q2), (t.q2, t.q1)]


def classify(t: BiquadTriple) -> GenusVerdict:
    case = case_of(t)
    rule = _CASES[case]
    for q1, q2 in _orientations(t, case):
        for i, ok in enumerate(rule(t.p1, q1, q2), start=1):
            if ok:
                return GenusVerdict(True, case, i, (q1, q2))
    return GenusVerdict(False, case, None, None)


"""Euclidean-ideal-class verdicts for K = Q(sqrt(p1), sqrt(q1 q2)).

Sufficient criterion: h(Q(sqrt(p1))) = 1, h(Q(sqrt(q1 q2))) and
h(Q(sqrt(p1 q1 q2))) powers of two, elementary genus field, and neither q is 3.
When q1 = q2 = 1 (mod 4) the same conditions are also necessary, which is the
only situation where the verdict can be No.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from . import genus
from .genus import BiquadTriple, GenusVerdict, InvalidTriple
from .intarith import crt, is_power_of_two, jacobi, lcm, primes_in_progression
from .quadfield import class_number, conductor_quad


class Verdict(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"
    INVALID = "Invalid"


@dataclass(frozen=True)
class Certificate:
    h0: Optional[int] = None
    h1: Optional[int] = None
    h2: Optional[int] = None
    h1_pow2: Optional[bool] = None
    h2_pow2: Optional[bool] = None
    genus: Optional[GenusVerdict] = None
    q_mod4: Optional[str] = None
    theorem: Optional[str] = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "h0": self.h0,
            "h1": self.h1,
            "h2": self.h2,
            "h1_pow2": self.h1_pow2,
            "h2_pow2": self.h2_pow2,
            "genus": self.genus.to_dict() if self.genus else None,
            "q_mod4": self.q_mod4,
            "theorem": self.theorem,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class Decision:
    triple: tuple
    verdict: Verdict
    certificate: Certificate = field(default_factory=Certificate)

    def __post_init__(self):
        c = self.certificate
        hyp = c.h0 == 1 and bool(c.h1_pow2) and bool(c.h2_pow2)
        if self.verdict is Verdict.YES and not (hyp and c.genus and c.genus.elementary):
            raise AssertionError(f"Yes without its hypotheses: {self}")
        if self.verdict is Verdict.NO and not (
                hyp and c.q_mod4 == "both 1" and c.genus and not c.genus.elementary):
            raise AssertionError(f"No without its hypotheses: {self}")

    def to_dict(self) -> dict:
        return {
            "triple": list(self.triple),
            "verdict": self.verdict.value,
            "certificate": self.certificate.to_dict(),
        }


def conductor_biquad(t: BiquadTriple) -> int:
    """Conductor of K: lcm of the conductors of two generating subfields."""
    return lcm(conductor_quad(t.p1), conductor_quad(t.d))


def q_mod4_class(t: BiquadTriple) -> str:
    r = sorted((t.q1 % 4, t.q2 % 4))
    return {(1, 1): "both 1", (3, 3): "both 3"}.get(tuple(r), "mixed")


def decide(p1: int, q1: int, q2: int) -> Decision:
    try:
        t = BiquadTriple(p1, q1, q2)
    except InvalidTriple as exc:
        return Decision((p1, q1, q2), Verdict.INVALID, Certificate(reason=str(exc)))
    return decide_triple(t)


def decide_triple(t: BiquadTriple) -> Decision:
    h0 = class_number(t.p1)
    h1 = class_number(t.d)
    h2 = class_number(t.p1 * t.d)
    h1p, h2p = is_power_of_two(h1), is_power_of_two(h2)
    g = genus.classify(t)
    qc = q_mod4_class(t)
    base = dict(h0=h0, h1=h1, h2=h2, h1_pow2=h1p, h2_pow2=h2p, genus=g, q_mod4=qc)

    if not (h0 == 1 and h1p and h2p):
        return Decision(t.as_tuple(), Verdict.UNKNOWN,
                        Certificate(**base, reason="class number hypotheses fail"))
    if qc == "both 1":
        verdict = Verdict.YES if g.elementary else Verdict.NO
        reason = "genus field elementary" if g.elementary else "genus field not elementary"
        return Decision(t.as_tuple(), verdict,
                        Certificate(**base, theorem="iff (q1 = q2 = 1 mod 4)", reason=reason))
    if not g.elementary:
        return Decision(t.as_tuple(), Verdict.UNKNOWN,
                        Certificate(**base, theorem="sufficient",
                                    reason="genus field not elementary; criterion only sufficient"))
    if 3 in (t.q1, t.q2):
        return Decision(t.as_tuple(), Verdict.UNKNOWN,
                        Certificate(**base, theorem="sufficient",
                                    reason="q = 3 is excluded by the criterion"))
    return Decision(t.as_tuple(), Verdict.YES,
                    Certificate(**base, theorem="sufficient", reason="genus field elementary"))


# -- arithmetic progression inside the generator set ------------------------

class NoWitness(ValueError):
    pass


@dataclass(frozen=True)
class ProgressionWitness:
    u: int
    l: int
    checked_prime: int

    def to_dict(self) -> dict:
        return {"u": self.u, "l": self.l, "checked_prime": self.checked_prime}


def symbol_targets(t: BiquadTriple) -> dict[int, int]:
    """Required (r/p) for primes p whose Frobenius generates Cl(K) mod squares."""
    return {t.p1: 1, t.q1: -1, t.q2: -1}


def in_S(t: BiquadTriple, p: int) -> bool:
    if p % 2 == 0:
        return False
    return all(jacobi(r, p) == want for r, want in symbol_targets(t).items())


def progression_witness(t: BiquadTriple) -> ProgressionWitness:
    """u mod l with gcd(u, l) = gcd((u-1)/2, l) = 1 and every prime = u (mod l) in S.

    A prime p = 3 (mod 4) turns (r/p) into (p/r) * (-1)^((r-1)/2) for odd r,
    and (2/p) = 1 iff p = 7 (mod 8).
    """
    l = lcm(16, conductor_biquad(t))
    targets = symbol_targets(t)
    residues, moduli = [], []
    mod16 = 3
    for r, want in targets.items():
        if r == 2:
            mod16 = 7 if want == 1 else 3
            continue
        need = want * (1 if r % 4 == 1 else -1)
        # smallest residue with (x/r) = need, avoiding 1 so (u-1)/2 stays prime to r
        x = next((x for x in range(2, r) if jacobi(x, r) == need), None)
        if x is None:
            raise NoWitness(f"no residue mod {r} with symbol {need} other than 1")
        residues.append(x)
        moduli.append(r)
    residues.append(mod16)
    moduli.append(16)
    prod = 1
    for m in moduli:
        prod *= m
    assert prod == l, (prod, l)
    u = crt(residues, moduli)
    assert gcd(u, l) == 1 and gcd((u - 1) // 2, l) == 1
    p = next(iter(primes_in_progression(u, l, 1)))
    if not in_S(t, p):
        raise AssertionError(f"prime {p} = {u} (mod {l}) is not in S")
    return ProgressionWitness(u, l, p)

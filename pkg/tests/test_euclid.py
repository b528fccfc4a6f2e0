"""euclid: verdicts, certificates, conductors and progression witnesses."""

import random
from math import gcd

import pytest

from biquadeuclid.euclid import (Certificate, Decision, NoWitness, Verdict, conductor_biquad,
                                 decide, decide_triple, in_S, progression_witness, q_mod4_class)
from biquadeuclid.genus import BiquadTriple
from biquadeuclid.intarith import jacobi, primes_in_progression, primes_up_to
from biquadeuclid.table1 import default_fixture_text, load_fixture
from oracles import valid_triples


def test_decide_examples():
    assert decide(29, 37, 97).verdict is Verdict.YES
    assert decide(37, 41, 53).verdict is Verdict.NO
    assert decide(2, 5, 7).verdict is Verdict.YES
    assert decide(4, 5, 7).verdict is Verdict.INVALID
    assert decide(5, 5, 7).verdict is Verdict.INVALID


def test_certificate_contents():
    d = decide(2, 5, 7)
    c = d.certificate
    assert (c.h0, c.h1, c.h2) == (1, 2, 2)
    assert c.genus.elementary and c.genus.orientation == (7, 5)
    assert c.q_mod4 == "mixed" and c.theorem == "sufficient"
    d = decide(37, 41, 53)
    assert d.certificate.theorem == "iff (q1 = q2 = 1 mod 4)"
    assert d.to_dict()["certificate"]["genus"]["elementary"] is False


def test_unknown_branches():
    # q = 3 with an elementary genus field
    d = decide(7, 3, 5)
    assert d.verdict is Verdict.UNKNOWN and "q = 3" in d.certificate.reason
    assert d.certificate.genus.elementary
    # h(Q(sqrt 79)) = 3
    assert decide(79, 5, 13).verdict is Verdict.UNKNOWN
    # non-elementary genus with a q = 3 (mod 4): criterion only sufficient
    d = decide(5, 3, 29)
    assert d.verdict is Verdict.UNKNOWN and not d.certificate.genus.elementary


def test_decision_invariants_are_enforced():
    with pytest.raises(AssertionError):
        Decision((29, 37, 97), Verdict.YES, Certificate(h0=3, h1=1, h2=1, h1_pow2=True,
                                                        h2_pow2=True))
    with pytest.raises(AssertionError):
        Decision((29, 37, 97), Verdict.NO, Certificate(h0=1, h1=1, h2=1, h1_pow2=True,
                                                       h2_pow2=True, q_mod4="mixed"))


def test_q_mod4_class():
    assert q_mod4_class(BiquadTriple(29, 37, 97)) == "both 1"
    assert q_mod4_class(BiquadTriple(29, 3, 7)) == "both 3"
    assert q_mod4_class(BiquadTriple(29, 3, 2)) == "mixed"


def test_conductor_examples():
    assert conductor_biquad(BiquadTriple(2, 5, 7)) == 280
    assert conductor_biquad(BiquadTriple(29, 37, 97)) == 104081
    for q1, q2 in ((13, 17), (3, 7), (37, 41)):
        assert conductor_biquad(BiquadTriple(5, q1, q2)) == 5 * q1 * q2


def test_table1_verdicts():
    for row in load_fixture(default_fixture_text()):
        v = decide(row.p1, row.q1, row.q2).verdict
        assert v.value[0] == row.euclidean, row


def test_yes_with_both_one_mod_four_has_even_class_number():
    for t in valid_triples(120):
        d = decide_triple(t)
        c = d.certificate
        if d.verdict is Verdict.YES and c.q_mod4 == "both 1":
            assert (c.h1 * c.h2) % 2 == 0, t


def test_no_only_with_both_one_mod_four():
    for t in valid_triples(100):
        d = decide_triple(t)
        if d.verdict is Verdict.NO:
            assert t.q1 % 4 == 1 and t.q2 % 4 == 1


def test_swap_symmetry_below_80():
    # acceptance criterion 6(f) covers entries below 150
    for t in valid_triples(80):
        assert decide_triple(t).verdict == decide_triple(t.swapped()).verdict


# -- witnesses ---------------------------------------------------------------------

def check_witness(t, w, n_primes=3):
    assert w.l % 16 == 0 and w.l % conductor_biquad(t) == 0
    assert w.u % 2 == 1 and 0 <= w.u < w.l
    assert gcd(w.u, w.l) == 1 and gcd((w.u - 1) // 2, w.l) == 1
    assert w.u % 4 == 3
    assert w.checked_prime % w.l == w.u
    for p in primes_in_progression(w.u, w.l, n_primes):
        assert jacobi(t.p1, p) == 1 and jacobi(t.q1, p) == -1 and jacobi(t.q2, p) == -1
        assert in_S(t, p)


def test_witness_spec_example():
    t = BiquadTriple(29, 37, 97)
    w = progression_witness(t)
    assert w.l == 1665296
    check_witness(t, w)


def test_witness_even_entries():
    for t in (BiquadTriple(2, 7, 5), BiquadTriple(2, 5, 13), BiquadTriple(7, 2, 5),
              BiquadTriple(5, 13, 2)):
        w = progression_witness(t)
        for p in primes_in_progression(w.u, w.l, 3):
            assert in_S(t, p)
            s2 = 1 if p % 8 in (1, 7) else -1
            want = {t.p1: 1, t.q1: -1, t.q2: -1}[2]
            assert s2 == want


def test_witness_q_three_reports_failure():
    with pytest.raises(NoWitness):
        progression_witness(BiquadTriple(29, 3, 5))


def test_witness_on_50_random_yes_triples():
    odd_yes = [t for t in valid_triples(150)
               if 2 not in t.as_tuple() and decide_triple(t).verdict is Verdict.YES]
    rng = random.Random(50)
    for t in rng.sample(odd_yes, 50):
        check_witness(t, progression_witness(t))


def test_primes_in_S_split_the_right_way():
    # density check: S has density 1/8 among primes, the progression lands inside it
    t = BiquadTriple(29, 37, 97)
    ps = [p for p in primes_up_to(20000) if p not in (29, 37, 97)]
    frac = sum(in_S(t, p) for p in ps) / len(ps)
    assert 0.09 < frac < 0.16

"""Euclidean ideal classes of real biquadratic fields K = Q(sqrt(p1), sqrt(q1 q2)).

Typical use::

    from biquadeuclid import decide, classify, BiquadTriple
    decide(29, 37, 97).verdict      # Verdict.YES
    classify(BiquadTriple(5, 3, 29)).elementary   # False
"""

from .biquad import BiquadElement, class_number_biquad, is_square_in_K, kuroda, unit_index
from .euclid import Decision, Verdict, conductor_biquad, decide, progression_witness
from .genus import BiquadTriple, GenusVerdict, InvalidTriple, classify
from .localsym import REAL, Place, hilbert_symbol, product_over_places
from .quadfield import (QuadUnit, class_number, conductor_quad, fundamental_unit,
                        narrow_class_number, quad_field, unit_residue_symbol)

__all__ = [
    "BiquadElement", "BiquadTriple", "Decision", "GenusVerdict", "InvalidTriple", "Place",
    "QuadUnit", "REAL", "Verdict", "class_number", "class_number_biquad", "classify",
    "conductor_biquad", "conductor_quad", "decide", "fundamental_unit", "hilbert_symbol",
    "is_square_in_K", "kuroda", "narrow_class_number", "product_over_places",
    "progression_witness", "quad_field", "unit_index", "unit_residue_symbol",
]

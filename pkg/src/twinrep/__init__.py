"""Exact computations with representations of twin groups."""

from .ring import LaurentPoly, RatFunc, T, parse, parse_laurent, parse_ratfunc
from .freegroup import FreeAut, FreeWord, GroupRingElt, fox_derivative, jacobian_matrix, magnus_specialize
from .presentations import TwinWord, s_word, build_presentation, enumerate_T_elements, normal_form_T, words_equal_in_T
from .matrix import Matrix
from .reps import (
    MatrixRep,
    eta1_automorphism,
    eta1_composition_factor,
    eta1_matrix,
    eta2_matrix,
    evaluate_word,
    two_local_family_T2,
    vt_extension_eta1,
    vt_wt_extension_eta2,
)

__all__ = [
    "LaurentPoly", "RatFunc", "T", "parse", "parse_laurent", "parse_ratfunc",
    "FreeAut", "FreeWord", "GroupRingElt", "fox_derivative", "jacobian_matrix", "magnus_specialize",
    "TwinWord", "s_word", "build_presentation", "enumerate_T_elements", "normal_form_T", "words_equal_in_T",
    "Matrix", "MatrixRep", "eta1_automorphism", "eta1_composition_factor", "eta1_matrix",
    "eta2_matrix", "evaluate_word", "two_local_family_T2", "vt_extension_eta1", "vt_wt_extension_eta2",
]

__version__ = "0.1.0"

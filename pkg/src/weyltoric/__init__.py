"""Intersection numbers and cohomology structure constants of the toric
manifolds attached to Weyl-chamber fans (types A, B, C, D and G2)."""

from .basis_ring import (
    BasisCombination, PairingMatrix, SizeCapExceeded, duality_check,
    expand_product, pairing_matrix, structure_constants,
)
from .diagram import (
    I_A, I_B, I_C, I_D, I_G2, YoungDiagram, build_lambda, corner_data,
    vanishing_predicate,
)
from .fan_oracle import build_fan, oracle_integral, verify_family
from .intersect import (
    IntersectionResult, Reason, TauMonomial, class_X, class_Y,
    intersection_number, is_chain, parse_monomial, triple_number,
)
from .weyl import (
    RootSystemId, WeylElement, act, ascent_labels, ascents, coweight_label,
    descent_labels, descents, enumerate_weyl, length, longest_element,
    parse_element,
)

__version__ = "0.1.0"

"""Homotopy-class calculator for max/min lattice-term maps between
long-ray manifolds: antichain classification of maps R^n -> R, direction
matrices of self-maps, signed classes for the long line, and class counts
for pipe surfaces."""

__version__ = "0.1.0"

from .lattice import (Antichain, FinitePreorder, UpSet,
                      antichains_of_preorder, count_antichains,
                      count_antichains_dp, count_antichains_of_preorder,
                      count_antichains_oracle, enumerate_antichains,
                      minimal_elements, preorder_from_generators,
                      upward_closure)
from .terms import (Const, Coord, DiagonalSignature, MapTerm, Max, Min,
                    NegPart, PosPart, TermSyntaxError, VectorTerm,
                    canonical_representative, cofinality_class, compose,
                    diagonal_point, diagonal_signature, eval_numeric,
                    homotopic, homotopy_class, parse_term, parse_vector,
                    print_term, print_vector)
from .dmatrix import (DirectionMatrix, bool_mat_mul, direction_matrix,
                      verify_monoid_law)
from .signed import (ClassIntoL, SignedAntichain, SignedSubset,
                     admissible_subsets, classify_Rn_to_L,
                     count_classes_Ln_to_R, count_classes_Rn_to_L,
                     signed_cofinality_class, signed_homotopy_class,
                     signed_minimal_elements)
from .pipes import (PipeCodeError, code_equivalent, code_orbit,
                    count_pipe_classes, pipe_class_antichains,
                    pipe_generators, pipe_preorder)

__all__ = [
    "Antichain", "ClassIntoL", "Const", "Coord", "DiagonalSignature",
    "DirectionMatrix", "FinitePreorder", "MapTerm", "Max", "Min", "NegPart",
    "PipeCodeError", "PosPart", "SignedAntichain", "SignedSubset",
    "TermSyntaxError", "UpSet", "VectorTerm", "admissible_subsets",
    "antichains_of_preorder", "bool_mat_mul", "canonical_representative",
    "classify_Rn_to_L", "code_equivalent", "code_orbit", "cofinality_class",
    "compose", "count_antichains", "count_antichains_dp",
    "count_antichains_of_preorder", "count_antichains_oracle",
    "count_classes_Ln_to_R", "count_classes_Rn_to_L", "count_pipe_classes",
    "diagonal_point", "diagonal_signature", "direction_matrix",
    "enumerate_antichains", "eval_numeric", "homotopic", "homotopy_class",
    "minimal_elements", "parse_term", "parse_vector", "pipe_class_antichains",
    "pipe_generators", "pipe_preorder", "preorder_from_generators",
    "print_term", "print_vector", "signed_cofinality_class",
    "signed_homotopy_class", "signed_minimal_elements", "upward_closure",
    "verify_monoid_law",
]

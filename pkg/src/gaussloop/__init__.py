"""Loop invariants of virtual knots at the Gauss-diagram level.

The library models knots as Gauss diagrams (circles with signed, directed
chords), computes the integer loop invariants, the framed invariant valued
in an abelian group of exponent two, and their common generalization valued
in a quotient of configuration sums; it also provides a Reidemeister-move
engine for randomized invariance certification and homology-labeled
diagrams for knots in thickened surfaces.
"""

from .diagram import (Arrow, GaussCodeError, GaussDiagram, parse_gauss_code,
                      parse_gauss_lines)
from .groupa import AElement, product
from .weights import (WeightTriple, PairConfig, int_sign, crossing_weight,
                      all_weights, relative_weights, classify_pair, pair_sign)
from .invariants import (ACombination, three_loop, framed_invariant,
                         general_invariant, loop_functional, normal_form,
                         writhe_correction, symmetry_report, SymmetryReport,
                         connect_ratio)
from .moves import (Move, enumerate_moves, apply_move, random_walk,
                    finite_type_derivative, r1_add, r2_add, r3_moves)
from .surface import (LabeledSurfaceDiagram, parse_labeled, intersection_number,
                      omega, surface_invariant, surface_normal_form,
                      gv_functional, weight_image, project_to_virtual,
                      commuting_check, labeled_apply)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "GaussCodeError", "GaussDiagram", "parse_gauss_code",
    "parse_gauss_lines", "AElement", "product", "WeightTriple", "PairConfig",
    "int_sign", "crossing_weight", "all_weights", "relative_weights",
    "classify_pair", "pair_sign", "ACombination", "three_loop",
    "framed_invariant", "general_invariant", "loop_functional", "normal_form",
    "writhe_correction", "symmetry_report", "SymmetryReport", "connect_ratio",
    "Move", "enumerate_moves", "apply_move", "random_walk",
    "finite_type_derivative", "r1_add", "r2_add", "r3_moves",
    "LabeledSurfaceDiagram", "parse_labeled", "intersection_number", "omega",
    "surface_invariant", "surface_normal_form", "gv_functional",
    "weight_image", "project_to_virtual", "commuting_check", "labeled_apply",
]

"""Exact symbolic computation in spin, covering and Hecke-Clifford
algebras of finite and affine type: standard-monomial normal forms, the
Morita super-equivalence maps, intertwiners, the basic spin supermodule,
Jucys-Murphy elements and cyclotomic-ideal machinery.  All arithmetic is
exact over Laurent polynomials in q with Gaussian-rational coefficients.
"""

from .coeff import EPS, GaussRat, Laurent, epsilon, laurent
from .engine import Element, EngineError, mul, normalize
from .finite import (cover_ops, cover_quotient, spin_ops, spin_rewrite,
                     thecke_ops)
from .affine import (cover_aff_ops, cover_aff_quotient, elementary_symmetric,
                     odd_center_candidate, pq_aff_ops, recursion_images,
                     spin_aff_ops, spin_aff_rewrite)
from .heckecliff import (hc_aff_ops, hc_ops, hecke_aff_ops, perm_length,
                         reduced_word, tsigma_mul)
from .tensor import tensor_ops
from .maps import (GeneratorMap, affine_involution, named_map, phi_affine,
                   phi_finite, psi_affine, psi_finite, spin_involution)
from .localization import (LocElement, delta, gimel, intertwiner_checks,
                           invert_p_diff)
from .reps import act, clifford_matrices, pi_q
from .jm import (CycIdeal, classify_ideal, cyclotomic_dim, jm_images,
                 jm_relation_checks, theorem63_map)
from .exprs import ALGEBRAS, ParseError, get_algebra, parse_element
from .suites import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "EPS", "GaussRat", "Laurent", "epsilon", "laurent",
    "Element", "EngineError", "mul", "normalize",
    "spin_ops", "cover_ops", "thecke_ops", "spin_rewrite", "cover_quotient",
    "spin_aff_ops", "pq_aff_ops", "cover_aff_ops", "spin_aff_rewrite",
    "cover_aff_quotient", "recursion_images", "elementary_symmetric",
    "odd_center_candidate",
    "hc_ops", "hc_aff_ops", "hecke_aff_ops", "tsigma_mul", "perm_length",
    "reduced_word",
    "tensor_ops",
    "GeneratorMap", "spin_involution", "affine_involution", "named_map",
    "phi_finite", "psi_finite", "phi_affine", "psi_affine",
    "LocElement", "delta", "gimel", "invert_p_diff", "intertwiner_checks",
    "clifford_matrices", "pi_q", "act",
    "jm_images", "jm_relation_checks", "CycIdeal", "classify_ideal",
    "cyclotomic_dim", "theorem63_map",
    "ALGEBRAS", "ParseError", "get_algebra", "parse_element",
    "SUITES", "run_suite",
]

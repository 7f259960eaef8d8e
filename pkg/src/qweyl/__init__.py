"""Exact computation in multiparameter quantized Weyl algebras A_n^{Q,Gamma}(K).

K is the rational function field Q(t_1, ..., t_k).  The package provides PBW
normal forms, the normal elements z_i and division by them, and a decision
procedure for isomorphism together with explicit isomorphisms.
"""

from .expr import ParseError, parse_expr, parse_scalar, print_expr
from .iso import (
    Homomorphism,
    IsoDecision,
    IsoWitness,
    LemmaOutcome,
    automorphism,
    build_iso,
    check_lemma_instance,
    decide_iso,
    invert_iso,
    lambda_of,
    partner_presentation,
    verify_hom,
)
from .linalg import LinearSystem, divide_by_z, solve
from .pbw import (
    PbwPolynomial,
    commutator,
    filtration_degree,
    monomial_count,
    nf,
    pbw_add,
    pbw_mul,
    pbw_scale,
    total_degree,
    z_element,
)
from .presentation import AlgebraParams, GeneratorRef, format_spec, genericity_rank, parse_spec, validate
from .scalars import Scalar, is_root_of_unity, scalar_eq, scalar_parse, scalar_pow, scalar_print

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams",
    "GeneratorRef",
    "Homomorphism",
    "IsoDecision",
    "IsoWitness",
    "LemmaOutcome",
    "LinearSystem",
    "ParseError",
    "PbwPolynomial",
    "Scalar",
    "automorphism",
    "build_iso",
    "check_lemma_instance",
    "commutator",
    "decide_iso",
    "divide_by_z",
    "filtration_degree",
    "format_spec",
    "genericity_rank",
    "invert_iso",
    "is_root_of_unity",
    "lambda_of",
    "monomial_count",
    "nf",
    "parse_expr",
    "parse_scalar",
    "parse_spec",
    "partner_presentation",
    "pbw_add",
    "pbw_mul",
    "pbw_scale",
    "print_expr",
    "scalar_eq",
    "scalar_parse",
    "scalar_pow",
    "scalar_print",
    "solve",
    "total_degree",
    "validate",
    "verify_hom",
    "z_element",
]

"""Exact computer algebra for the quantum matrix *-algebra Pol(Mat_n)_q.

Covers normal ordering, the U_q sl_{2n} action, the Fock representation,
the canonical invariants ``y_nu`` and their spectra, and the factorial
Schur / interpolation polynomial side, all over exact rationals in the
formal variable ``s = q**(1/2)``.
"""

from .action import (
    UqGenerator,
    act,
    act_word,
    generate_module,
    serre_audit,
    weight,
    weyl_dimension,
)
from .algebra import AlgebraElement, GenIndex, QuantumMatrixAlgebra, algebra, r_matrix
from .coefficients import (
    Q,
    S,
    LaurentPoly,
    NotDivisible,
    PoleAtOne,
    RationalFunction,
    eval_at,
    eval_q,
    exact_div,
    q_pow,
    rational_limit_at_one,
    s_pow,
)
from .fock import FockVector, apply, fock_form, gram, vacuum
from .invariants import (
    build_y,
    commutativity_check,
    eigenvalue,
    find_invariants,
    prop6_check,
    theorem1_check,
    vanishing_check,
)
from .partitions import Partition, dominance_leq, enumerate_partitions, knop_bar, spec_points
from .symmetric import (
    MultiPoly,
    factorial_schur_classical,
    knop_interpolation,
    lemma3_check,
    lemma4_check,
    monomial_symmetric,
    prop4_check,
    q_factorial_schur_eval,
    q_factorial_schur_symbolic,
    qpochhammer,
    rhs_theorem1,
    rhs_theorem2,
)

__all__ = [
    "UqGenerator",
    "act",
    "act_word",
    "generate_module",
    "serre_audit",
    "weight",
    "weyl_dimension",
    "AlgebraElement",
    "GenIndex",
    "QuantumMatrixAlgebra",
    "algebra",
    "r_matrix",
    "Q",
    "S",
    "LaurentPoly",
    "NotDivisible",
    "PoleAtOne",
    "RationalFunction",
    "eval_at",
    "eval_q",
    "exact_div",
    "q_pow",
    "rational_limit_at_one",
    "s_pow",
    "FockVector",
    "apply",
    "fock_form",
    "gram",
    "vacuum",
    "build_y",
    "commutativity_check",
    "eigenvalue",
    "find_invariants",
    "prop6_check",
    "theorem1_check",
    "vanishing_check",
    "Partition",
    "dominance_leq",
    "enumerate_partitions",
    "knop_bar",
    "spec_points",
    "MultiPoly",
    "factorial_schur_classical",
    "knop_interpolation",
    "lemma3_check",
    "lemma4_check",
    "monomial_symmetric",
    "prop4_check",
    "q_factorial_schur_eval",
    "q_factorial_schur_symbolic",
    "qpochhammer",
    "rhs_theorem1",
    "rhs_theorem2",
]

__version__ = "0.1.0"

"""Fock representation on H = C[Mat_n]_q f_0 and its invariant form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraElement, QuantumMatrixAlgebra, _acc, _clean
from .coefficients import ZERO, eval_q
from .linalg import bareiss_det

__all__ = [
    "FockVector",
    "vacuum",
    "apply",
    "fock_form",
    "gram",
    "is_positive_definite",
    "monomial_basis",
]


@dataclass(frozen=True)
class FockVector:
    """``poly * f_0`` for a holomorphic polynomial ``poly``."""

    poly: AlgebraElement

    def __post_init__(self):
        if not self.poly.is_holomorphic():
            raise ValueError("Fock vectors are represented by holomorphic polynomials")

    @property
    def alg(self) -> QuantumMatrixAlgebra:
        return self.poly.alg

    def __bool__(self):
        return bool(self.poly)

    def __add__(self, other):
        return FockVector(self.poly + other.poly)

    def __sub__(self, other):
        return FockVector(self.poly - other.poly)

    def __mul__(self, c):
        return FockVector(self.poly * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def vacuum_coefficient(self):
        return self.poly.coefficient((), ())

    def __repr__(self):
        return f"({self.poly}) f0"


def vacuum(alg: QuantumMatrixAlgebra) -> FockVector:
    return FockVector(alg.one())


def apply(f: AlgebraElement, v: FockVector) -> FockVector:
    """``T_F(f) v``: normal order ``f * v.poly`` and let starred letters kill ``f_0``."""
    alg = f.alg
    by_anti = {}
    for (h, a), c in f.terms.items():
        by_anti.setdefault(a, []).append((h, c))
    out = {}
    for a, holos in by_anti.items():
        reduced = {}
        for (w, _), cv in v.poly.terms.items():
            for w2, c2 in alg.fock_apply_anti(a, w).items():
                _acc(reduced, w2, cv * c2)
        reduced = _clean(reduced)
        if not reduced:
            continue
        for h, c in holos:
            for w, cw in reduced.items():
                for w2, c2 in alg.holo_mul(h, w).items():
                    _acc(out, (w2, ()), c * cw * c2)
    return FockVector(AlgebraElement._raw(alg, _clean(out)))


def fock_form(u: FockVector, v: FockVector):
    """``(u, v)``: vacuum coefficient of ``T_F(v.poly^*) u``."""
    return apply(v.poly.star(), u).vacuum_coefficient()


def gram(basis) -> list:
    """Matrix of pairings ``G[i][j] = (basis[i], basis[j])``."""
    vecs = [b if isinstance(b, FockVector) else FockVector(b) for b in basis]
    k = len(vecs)
    g = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            x = fock_form(vecs[i], vecs[j])
            g[i][j] = x
            g[j][i] = x if i == j else fock_form(vecs[j], vecs[i])
    return g


def monomial_basis(alg: QuantumMatrixAlgebra, degree: int) -> list:
    return [FockVector(alg.monomial(w)) for w in alg.holo_monomials(degree)]


def is_positive_definite(matrix, qv=Fraction(1, 2)) -> bool:
    """Exact Sylvester test at a rational value of ``q``."""
    m = [[eval_q(x, qv) for x in row] for row in matrix]
    for k in range(1, len(m) + 1):
        if bareiss_det([row[:k] for row in m[:k]], Fraction(1)) <= 0:
            return False
    return True

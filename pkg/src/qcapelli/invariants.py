"""The canonical U_q k-invariants ``y_nu`` and their spectra on the Fock space."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .action import act, generate_module, monomial_weight, u_k_generators, weight
from .algebra import AlgebraElement, QuantumMatrixAlgebra, algebra
from .coefficients import ONE, ZERO, RationalFunction
from .fock import FockVector, apply, gram
from .linalg import SingularSystem, inverse, nullspace, rank
from .partitions import Partition, ones
from .symmetric import rhs_theorem1

__all__ = [
    "InvariantElement",
    "NotProportional",
    "SingularGram",
    "build_y",
    "is_invariant",
    "eigenvalue",
    "theorem1_check",
    "commutativity_check",
    "prop6_sides",
    "prop6_check",
    "vanishing_check",
    "find_invariants",
    "lemma1_rank",
]


class NotProportional(ArithmeticError):
    """``T_F(y_nu) v_lam f_0`` is not a multiple of ``v_lam f_0``."""


class SingularGram(ArithmeticError):
    pass


@dataclass(frozen=True)
class InvariantElement:
    element: AlgebraElement
    nu: Partition


def _simplify(c):
    if isinstance(c, RationalFunction) and c.is_laurent():
        return c.num
    return c


def _block_inverse(basis, g):
    """Inverse of a Gram matrix that is block diagonal across weights."""
    blocks = {}
    for i, v in enumerate(basis):
        blocks.setdefault(weight(v), []).append(i)
    inv = {}
    zero, one = RationalFunction.coerce(ZERO), RationalFunction.coerce(ONE)
    for idx in blocks.values():
        sub = [[RationalFunction.coerce(g[i][j]) for j in idx] for i in idx]
        try:
            sinv = inverse(sub, zero, one)
        except SingularSystem as exc:
            raise SingularGram(str(exc)) from None
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                if sinv[a][b]:
                    inv[i, j] = sinv[a][b]
    return inv


def build_y(nu, basis=None, n: int | None = None) -> InvariantElement:
    """``y_nu = G_11 * sum_{j,k} (G^{-1})_{jk} v_j v_k^*``.

    ``basis`` defaults to the generated module with ``v_nu`` first; any other
    basis of the same module (still starting with ``v_nu``) gives the same
    element.
    """
    nu = Partition(nu, n)
    if basis is None:
        return _build_y_cached(nu)
    return _build_y(nu, list(basis))


@lru_cache(maxsize=None)
def _build_y_cached(nu: Partition) -> InvariantElement:
    alg = algebra(nu.n)
    return _build_y(nu, generate_module(alg, nu))


def _build_y(nu: Partition, basis) -> InvariantElement:
    alg = basis[0].alg
    g = gram(basis)
    inv = _block_inverse(basis, g)
    norm = g[0][0]
    terms = {}
    for (j, k), c in inv.items():
        coeff = c * norm
        for (hj, _), cj in basis[j].terms.items():
            for (hk, _), ck in basis[k].terms.items():
                key = (hj, hk)
                v = coeff * cj * ck
                terms[key] = terms[key] + v if key in terms else v
    terms = {m: _simplify(c) for m, c in terms.items() if c}
    return InvariantElement(AlgebraElement._raw(alg, terms), nu)


def is_invariant(f: AlgebraElement) -> bool:
    """Annihilated by ``E_j, F_j`` (``j != n``) and fixed by every ``K_i``."""
    alg = f.alg
    if any(any(w) for w in {monomial_weight(alg, m) for m in f.terms}):
        return False
    return not any(act(g, f) for g in u_k_generators(alg.n))


def eigenvalue(nu, lam):
    """Scalar by which ``T_F(y_nu)`` acts on the component ``H_lam``."""
    nu, lam = Partition(nu), Partition(lam)
    if nu.n != lam.n:
        raise ValueError("nu and lam must have the same length")
    alg = algebra(nu.n)
    y = build_y(nu).element
    v = alg.highest_weight_vector(lam)
    w = apply(y, FockVector(v)).poly
    m, cv = next(iter(sorted(v.terms.items())))
    ratio = RationalFunction.coerce(w.terms.get(m, ZERO)) / cv
    if w != v * ratio:
        raise NotProportional(f"y_{nu} on v_{lam}")
    return _simplify(ratio)


def theorem1_check(nu, lam) -> bool:
    return RationalFunction.coerce(eigenvalue(nu, lam)) == rhs_theorem1(nu, lam)


def vanishing_check(nu, lam) -> bool:
    nu, lam = Partition(nu), Partition(lam)
    if lam.weight > nu.weight or lam == nu:
        raise ValueError("requires |lam| <= |nu| and lam != nu")
    return not eigenvalue(nu, lam)


def commutativity_check(nu, mu) -> bool:
    y1 = build_y(nu).element
    y2 = build_y(mu).element
    return not (y1 * y2 - y2 * y1)


def prop6_sides(nu):
    nu = Partition(nu)
    alg = algebra(nu.n)
    k = nu[-1]
    det = alg.qdet()
    lhs = build_y(nu).element
    rhs = det**k * build_y(nu.minus_ones(k)).element * det.star() ** k
    return lhs, rhs


def prop6_check(nu) -> bool:
    lhs, rhs = prop6_sides(nu)
    return lhs == rhs


def _bidegree_monomials(alg: QuantumMatrixAlgebra, j: int):
    holo = alg.holo_monomials(j)
    by_w = {}
    for h in holo:
        by_w.setdefault(monomial_weight(alg, (h, ())), []).append(h)
    out = []
    for hs in by_w.values():
        for h in hs:
            for a in hs:
                out.append((h, a))
    return out


def find_invariants(n: int, j: int) -> list:
    """Basis of the U_q k-invariants of bidegree ``(j, j)``."""
    alg = algebra(n)
    monos = _bidegree_monomials(alg, j)
    rows = {}
    for col, m in enumerate(monos):
        f = AlgebraElement._raw(alg, {m: ONE})
        for g in u_k_generators(n):
            for m2, c in act(g, f).terms.items():
                rows.setdefault((g.kind, g.index, m2), {})[col] = c
    zero, one = RationalFunction.coerce(ZERO), RationalFunction.coerce(ONE)
    matrix = [
        [RationalFunction.coerce(r.get(c, ZERO)) for c in range(len(monos))]
        for _, r in sorted(rows.items())
    ]
    basis = nullspace(matrix, len(monos), zero, one)
    return [
        AlgebraElement._raw(alg, {m: _simplify(c) for m, c in zip(monos, vec) if c})
        for vec in basis
    ]


def lemma1_rank(n: int, j: int) -> int:
    """Rank of the products ``prod_k y_{1^k}^{a_k}`` with ``sum k a_k = j``."""
    alg = algebra(n)
    gens = [build_y(ones(k, n)).element for k in range(1, n + 1)]
    elems = []
    for a in product(*(range(j // k + 1) for k in range(1, n + 1))):
        if sum(k * e for k, e in zip(range(1, n + 1), a)) != j:
            continue
        f = alg.one()
        for y, e in zip(gens, a):
            f = f * y**e
        elems.append(f)
    keys = sorted({m for f in elems for m in f.terms})
    matrix = [[RationalFunction.coerce(f.terms.get(m, ZERO)) for m in keys] for f in elems]
    return rank(matrix)

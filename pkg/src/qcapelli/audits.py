"""Consistency audits for the rewriting system and the representation."""

from __future__ import annotations

import random
from itertools import product
from math import comb

from .algebra import GenIndex, QuantumMatrixAlgebra
from .coefficients import ONE, q_pow, s_pow

__all__ = [
    "random_element",
    "random_holomorphic",
    "pbw_audit",
    "relation_residuals",
    "associativity_audit",
]


def random_element(alg: QuantumMatrixAlgebra, rng: random.Random, max_bidegree=(2, 2), nterms=2):
    terms = {}
    for _ in range(nterms):
        h = tuple(sorted(rng.randrange(alg.ngens) for _ in range(rng.randint(0, max_bidegree[0]))))
        a = tuple(sorted(rng.randrange(alg.ngens) for _ in range(rng.randint(0, max_bidegree[1]))))
        terms[(h, a)] = s_pow(2 * rng.randint(-2, 2)) * rng.choice([1, -1, 2, 3])
    return alg.element(terms)


def random_holomorphic(alg: QuantumMatrixAlgebra, rng: random.Random, max_degree=2, nterms=2):
    return random_element(alg, rng, (max_degree, 0), nterms)


def pbw_audit(alg: QuantumMatrixAlgebra, degree: int, exhaustive: bool = True) -> bool:
    """Grade-``degree`` audit of the normal-form basis.

    Counts the sorted monomials against ``C(n^2+d-1, d)``, checks that each
    is its own normal form, and that every word of length ``degree`` reduces
    to the same element whether multiplied from the left or from the right,
    with support inside the sorted monomials.
    """
    sorted_words = alg.holo_monomials(degree)
    if len(sorted_words) != comb(alg.ngens + degree - 1, degree):
        return False
    basis = set(sorted_words)
    for w in sorted_words:
        if alg.holo_mul(w[:1], w[1:]) != {w: ONE}:
            return False
    words = product(range(alg.ngens), repeat=degree) if exhaustive else []
    for word in words:
        left = {(): ONE}
        for g in word:
            nxt = {}
            for m, c in left.items():
                for m2, c2 in alg.holo_mul(m, (g,)).items():
                    nxt[m2] = nxt.get(m2, 0) + c * c2
            left = {m: c for m, c in nxt.items() if c}
        right = {(): ONE}
        for g in reversed(word):
            nxt = {}
            for m, c in right.items():
                for m2, c2 in alg.left_mul(g, m).items():
                    nxt[m2] = nxt.get(m2, 0) + c * c2
            right = {m: c for m, c in nxt.items() if c}
        if left != right or not set(left) <= basis:
            return False
    return True


def relation_residuals(alg: QuantumMatrixAlgebra) -> list:
    """Normal forms of ``LHS - RHS`` for every instance of the defining relations.

    Returns the list of ``(label, indices, residual)`` with nonzero residual.
    """
    n = alg.n
    nf = alg.normal_form
    q = q_pow(1)
    qmqi = q_pow(1) - q_pow(-1)
    bad = []
    rng = range(1, n + 1)

    def z(a, al):
        return GenIndex(a, al)

    def zs(a, al):
        return GenIndex(a, al, True)

    for a, al, b, be in product(rng, rng, rng, rng):
        idx = (a, al, b, be)
        if (a == b and al < be) or (a < b and al == be):
            r = nf([z(a, al), z(b, be)]) - nf([z(b, be), z(a, al)], q)
            if r:
                bad.append(("3", idx, r))
            r = nf([zs(b, be), zs(a, al)]) - nf([zs(a, al), zs(b, be)], q)
            if r:
                bad.append(("6", idx, r))
        if al < be and a > b:
            r = nf([z(a, al), z(b, be)]) - nf([z(b, be), z(a, al)])
            if r:
                bad.append(("4", idx, r))
            r = nf([zs(b, be), zs(a, al)]) - nf([zs(a, al), zs(b, be)])
            if r:
                bad.append(("7", idx, r))
        if al < be and a < b:
            r = nf([z(a, al), z(b, be)]) - nf([z(b, be), z(a, al)]) - nf([z(a, be), z(b, al)], qmqi)
            if r:
                bad.append(("5", idx, r))
            r = (
                nf([zs(b, be), zs(a, al)])
                - nf([zs(a, al), zs(b, be)])
                - nf([zs(b, al), zs(a, be)], qmqi)
            )
            if r:
                bad.append(("8", idx, r))
        # cross relation, written out term by term from the R-matrix table
        from .algebra import r_matrix

        rhs = alg.element()
        for ap, bp, alp, bep in product(rng, rng, rng, rng):
            c = r_matrix(b, a, bp, ap) * r_matrix(be, al, bep, alp)
            if c:
                rhs = rhs + nf([z(ap, alp), zs(bp, bep)], q_pow(2) * c)
        if a == b and al == be:
            rhs = rhs + (ONE - q_pow(2))
        r = nf([zs(b, be), z(a, al)]) - rhs
        if r:
            bad.append(("9", idx, r))
    return bad


def associativity_audit(alg: QuantumMatrixAlgebra, samples: int, seed: int = 0,
                        max_bidegree=(2, 2)) -> dict:
    """Randomized checks of associativity and of the involution.

    Returns counts of failures per property.
    """
    rng = random.Random(seed)
    fails = {"associativity": 0, "involution": 0, "anti_automorphism": 0}
    for _ in range(samples):
        f, g, h = (random_element(alg, rng, max_bidegree) for _ in range(3))
        if (f * g) * h != f * (g * h):
            fails["associativity"] += 1
        if f.star().star() != f:
            fails["involution"] += 1
        if (f * g).star() != g.star() * f.star():
            fails["anti_automorphism"] += 1
    return fails

"""The *-algebra Pol(Mat_n)_q with normal ordering.

Generators ``z_a^alpha`` are numbered ``g = (a-1)*n + (alpha-1)``, so the
lexicographic order on ``(a, alpha)`` is the integer order.  A normal
monomial is a pair ``(holo, anti)`` of sorted tuples of generator numbers and
stands for

    z_{h_1} z_{h_2} ... z_{h_k} (z_{b_m})^* ... (z_{b_2})^* (z_{b_1})^*

with ``h_1 <= ... <= h_k`` and ``b_1 <= ... <= b_m``: the starred part is the
mirror image of a sorted holomorphic word.  With this convention the
involution simply swaps the two halves of every monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations

from .coefficients import ONE, ZERO, LaurentPoly, RationalFunction, q_pow

__all__ = [
    "GenIndex",
    "QuantumMatrixAlgebra",
    "AlgebraElement",
    "r_matrix",
    "algebra",
]

QINV = q_pow(-1)
Q1 = q_pow(1)
Q2 = q_pow(2)
QMQI = q_pow(1) - q_pow(-1)          # q - q^{-1}
ONE_MINUS_Q2 = ONE - Q2


@dataclass(frozen=True, order=True)
class GenIndex:
    """Generator ``z_a^alpha`` (``starred=False``) or its adjoint."""

    a: int
    alpha: int
    starred: bool = False

    def __str__(self):
        base = f"z_{self.a}^{self.alpha}"
        return f"({base})*" if self.starred else base


def r_matrix(j: int, i: int, jp: int, ip: int) -> LaurentPoly:
    """The four-case R-matrix table entering the cross relation."""
    if i != j and j == jp and i == ip:
        return QINV
    if i == j == ip == jp:
        return ONE
    if i == j and ip == jp and ip > i:
        return -(q_pow(-2) - ONE)
    return ZERO


def _acc(d: dict, key, c):
    v = d.get(key)
    d[key] = c if v is None else v + c


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class QuantumMatrixAlgebra:
    """Rewriting engine for Pol(Mat_n)_q; results are memoized per instance."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.ngens = n * n
        self._left = {}
        self._hmul = {}
        self._star_holo = {}
        self._anti_holo = {}
        self._fock1 = {}
        self._fock = {}
        self._cross = {}

    # -- indexing -----------------------------------------------------------
    def gen(self, a: int, alpha: int) -> int:
        n = self.n
        if not (1 <= a <= n and 1 <= alpha <= n):
            raise IndexError(f"generator index ({a}, {alpha}) out of range for n={n}")
        return (a - 1) * n + (alpha - 1)

    def rc(self, g: int):
        """Row and column (1-based) of generator number ``g``."""
        return g // self.n + 1, g % self.n + 1

    # -- holomorphic rules --------------------------------------------------
    def swap_rule(self, x: int, c: int):
        """``z_x z_c`` for ``x > c`` as a list of ``(coeff, u, v)`` with ``u <= v``."""
        a, al = self.rc(c)
        b, be = self.rc(x)
        if a == b or al == be:
            return [(QINV, c, x)]
        if be < al:
            return [(ONE, c, x)]
        return [(ONE, c, x), (-QMQI, self.gen(a, be), self.gen(b, al))]

    def left_mul(self, x: int, word: tuple) -> dict:
        """Normal form of ``z_x * z^word`` (``word`` sorted)."""
        if not word or x <= word[0]:
            return {(x,) + word: ONE}
        key = (x, word)
        hit = self._left.get(key)
        if hit is not None:
            return hit
        c, rest = word[0], word[1:]
        out = {}
        for coef, u, v in self.swap_rule(x, c):
            for m1, c1 in self.left_mul(v, rest).items():
                for m2, c2 in self.left_mul(u, m1).items():
                    _acc(out, m2, coef * c1 * c2)
        out = _clean(out)
        self._left[key] = out
        return out

    def holo_mul(self, left: tuple, right: tuple) -> dict:
        """Normal form of ``z^left * z^right`` for sorted words."""
        if not left:
            return {right: ONE}
        if not right or left[-1] <= right[0]:
            return {left + right: ONE}
        key = (left, right)
        hit = self._hmul.get(key)
        if hit is not None:
            return hit
        cur = {right: ONE}
        for x in reversed(left):
            nxt = {}
            for m, c in cur.items():
                for m2, c2 in self.left_mul(x, m).items():
                    _acc(nxt, m2, c * c2)
            cur = _clean(nxt)
        self._hmul[key] = cur
        return cur

    def anti_mul(self, left: tuple, right: tuple) -> dict:
        """Normal form of ``w(left) * w(right)`` for starred words."""
        return self.holo_mul(right, left)

    # -- cross relation -----------------------------------------------------
    def cross_rule(self, g: int, c: int):
        """``(z_g)^* z_c`` as ``([(coeff, x, y)], constant)`` meaning
        ``sum coeff z_x (z_y)^* + constant``."""
        key = (g, c)
        hit = self._cross.get(key)
        if hit is not None:
            return hit
        n = self.n
        b, be = self.rc(g)
        a, al = self.rc(c)
        terms = []
        for ap in range(1, n + 1):
            for bp in range(1, n + 1):
                r1 = r_matrix(b, a, bp, ap)
                if not r1:
                    continue
                for alp in range(1, n + 1):
                    for bep in range(1, n + 1):
                        r2 = r_matrix(be, al, bep, alp)
                        if r2:
                            terms.append((Q2 * r1 * r2, self.gen(ap, alp), self.gen(bp, bep)))
        const = ONE_MINUS_Q2 if g == c else ZERO
        self._cross[key] = (terms, const)
        return terms, const

    def star_holo(self, g: int, word: tuple) -> dict:
        """``(z_g)^* z^word`` as ``{(holo, anti): coeff}``; ``anti`` has length <= 1."""
        if not word:
            return {((), (g,)): ONE}
        key = (g, word)
        hit = self._star_holo.get(key)
        if hit is not None:
            return hit
        c, rest = word[0], word[1:]
        terms, const = self.cross_rule(g, c)
        out = {}
        for coef, x, y in terms:
            for (hx, ay), c1 in self.star_holo(y, rest).items():
                for h2, c2 in self.left_mul(x, hx).items():
                    _acc(out, (h2, ay), coef * c1 * c2)
        if const:
            _acc(out, (rest, ()), const)
        out = _clean(out)
        self._star_holo[key] = out
        return out

    def anti_holo(self, anti: tuple, holo: tuple) -> dict:
        """Normal form of ``w(anti) * z^holo``."""
        if not anti or not holo:
            return {(holo, anti): ONE}
        key = (anti, holo)
        hit = self._anti_holo.get(key)
        if hit is not None:
            return hit
        g, rest = anti[0], anti[1:]
        out = {}
        for (hx, ay), c1 in self.star_holo(g, holo).items():
            for (h2, a2), c2 in self.anti_holo(rest, hx).items():
                for a3, c3 in self.anti_mul(a2, ay).items():
                    _acc(out, (h2, a3), c1 * c2 * c3)
        out = _clean(out)
        self._anti_holo[key] = out
        return out

    def mul_monomials(self, m1, m2) -> dict:
        (h1, a1), (h2, a2) = m1, m2
        out = {}
        for (hx, ay), c in self.anti_holo(a1, h2).items():
            left = self.holo_mul(h1, hx)
            right = self.anti_mul(ay, a2)
            for hl, cl in left.items():
                for ar, cr in right.items():
                    _acc(out, (hl, ar), c * cl * cr)
        return out

    # -- Fock space -----------------------------------------------------------
    def fock_annihilate(self, g: int, word: tuple) -> dict:
        """``(z_g)^* z^word f_0`` as ``{holo: coeff}``."""
        if not word:
            return {}
        key = (g, word)
        hit = self._fock1.get(key)
        if hit is not None:
            return hit
        c, rest = word[0], word[1:]
        terms, const = self.cross_rule(g, c)
        out = {}
        for coef, x, y in terms:
            for hx, c1 in self.fock_annihilate(y, rest).items():
                for h2, c2 in self.left_mul(x, hx).items():
                    _acc(out, h2, coef * c1 * c2)
        if const:
            _acc(out, rest, const)
        out = _clean(out)
        self._fock1[key] = out
        return out

    def fock_apply_anti(self, anti: tuple, word: tuple) -> dict:
        """``w(anti) z^word f_0``; the smallest starred generator acts first."""
        if not anti:
            return {word: ONE}
        key = (anti, word)
        hit = self._fock.get(key)
        if hit is not None:
            return hit
        cur = {word: ONE}
        for g in anti:
            nxt = {}
            for m, c in cur.items():
                for m2, c2 in self.fock_annihilate(g, m).items():
                    _acc(nxt, m2, c * c2)
            cur = _clean(nxt)
            if not cur:
                break
        self._fock[key] = cur
        return cur

    # -- element constructors -------------------------------------------------
    def element(self, terms=None) -> "AlgebraElement":
        return AlgebraElement(self, terms or {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {((), ()): ONE})

    def scalar(self, c) -> "AlgebraElement":
        return AlgebraElement(self, {((), ()): c})

    def z(self, a: int, alpha: int) -> "AlgebraElement":
        return AlgebraElement(self, {((self.gen(a, alpha),), ()): ONE})

    def zstar(self, a: int, alpha: int) -> "AlgebraElement":
        return AlgebraElement(self, {((), (self.gen(a, alpha),)): ONE})

    def generator(self, g: GenIndex) -> "AlgebraElement":
        return self.zstar(g.a, g.alpha) if g.starred else self.z(g.a, g.alpha)

    def normal_form(self, word, coeff=ONE) -> "AlgebraElement":
        """Normal-ordered value of ``coeff * g_1 g_2 ... g_k``."""
        out = self.scalar(coeff)
        for g in word:
            out = out * self.generator(g)
        return out

    def monomial(self, holo=(), anti=(), coeff=ONE) -> "AlgebraElement":
        return AlgebraElement(self, {(tuple(sorted(holo)), tuple(sorted(anti))): coeff})

    def holo_monomials(self, degree: int) -> list:
        """All sorted holomorphic words of the given degree."""
        return list(combinations_with_replacement(range(self.ngens), degree))

    # -- q-minors -------------------------------------------------------------
    def qminor(self, rows, cols) -> "AlgebraElement":
        rows, cols = list(rows), list(cols)
        k = len(rows)
        if len(cols) != k:
            raise ValueError("row and column sets must have the same size")
        for idx in (rows, cols):
            if any(idx[i] >= idx[i + 1] for i in range(k - 1)):
                raise ValueError("index sets must be strictly increasing")
            if any(not 1 <= i <= self.n for i in idx):
                raise ValueError("index out of range")
        total = self.element()
        for perm in permutations(range(k)):
            inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
            word = [GenIndex(rows[i], cols[perm[i]]) for i in range(k)]
            total = total + self.normal_form(word, q_pow(inv) * (-1) ** inv)
        return total

    def qdet(self) -> "AlgebraElement":
        idx = range(1, self.n + 1)
        return self.qminor(idx, idx)

    def principal_minor(self, k: int) -> "AlgebraElement":
        idx = range(1, k + 1)
        return self.qminor(idx, idx)

    def highest_weight_vector(self, nu) -> "AlgebraElement":
        """Product of principal q-minors: ``det^{nu_n} prod_k minor_k^{nu_k - nu_{k+1}}``."""
        nu = tuple(nu)
        n = self.n
        if len(nu) != n:
            raise ValueError("partition length must equal n")
        out = self.principal_minor(n) ** nu[-1]
        for k in range(1, n):
            e = nu[k - 1] - nu[k]
            if e < 0:
                raise ValueError(f"{nu} is not a partition")
            if e:
                out = out * self.principal_minor(k) ** e
        return out


@lru_cache(maxsize=None)
def algebra(n: int) -> QuantumMatrixAlgebra:
    """Shared algebra instance (and rewriting caches) for a given ``n``."""
    return QuantumMatrixAlgebra(n)


class AlgebraElement:
    """Finite combination of normal monomials with Laurent or rational coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: QuantumMatrixAlgebra, terms: dict):
        self.alg = alg
        self.terms = {k: (v if isinstance(v, (LaurentPoly, RationalFunction)) else LaurentPoly(v))
                      for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, alg, terms):
        obj = object.__new__(cls)
        obj.alg = alg
        obj.terms = terms
        return obj

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _other(self, other):
        if isinstance(other, AlgebraElement):
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        o = self._other(other)
        t = dict(self.terms)
        for k, c in o.terms.items():
            _acc(t, k, c)
        return AlgebraElement._raw(self.alg, _clean(t))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            if not other:
                return AlgebraElement._raw(self.alg, {})
            return AlgebraElement._raw(self.alg, _clean({k: c * other for k, c in self.terms.items()}))
        alg = self.alg
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in alg.mul_monomials(m1, m2).items():
                    _acc(out, m, c12 * c)
        return AlgebraElement._raw(alg, _clean(out))

    def __rmul__(self, other):
        return self * other

    def __pow__(self, e: int):
        out = self.alg.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self._other(other)
        return not (self - other).terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def star(self) -> "AlgebraElement":
        """The involution: swap holomorphic and antiholomorphic halves."""
        return AlgebraElement._raw(self.alg, {(a, h): c for (h, a), c in self.terms.items()})

    def bidegrees(self) -> set:
        return {(len(h), len(a)) for h, a in self.terms}

    def is_holomorphic(self) -> bool:
        return all(not a for _, a in self.terms)

    def coefficient(self, holo=(), anti=()):
        return self.terms.get((tuple(holo), tuple(anti)), ZERO)

    def holo_exponents(self, word) -> list:
        e = [0] * self.alg.ngens
        for g in word:
            e[g] += 1
        return e

    def __repr__(self):
        if not self.terms:
            return "0"
        alg = self.alg
        parts = []
        for (h, a), c in sorted(self.terms.items()):
            gens = [f"z{alg.rc(g)[0]}{alg.rc(g)[1]}" for g in h]
            gens += [f"z{alg.rc(g)[0]}{alg.rc(g)[1]}^*" for g in reversed(a)]
            parts.append(f"({c})" + (" " + " ".join(gens) if gens else ""))
        return " + ".join(parts)

    def to_json(self) -> list:
        out = []
        for (h, a), c in sorted(self.terms.items()):
            out.append({
                "holo": self.holo_exponents(h),
                "anti": self.holo_exponents(a),
                "coeff": c.to_json(),
            })
        return out

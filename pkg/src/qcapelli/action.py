"""U_q sl_{2n} acting on Pol(Mat_n)_q by module-algebra rules.

Holomorphic generators follow the printed tables.  Starred generators are
handled through ``xi (f^*) = (S(xi)^* f)^*``, which gives

    K(f^*)   = (K^{-1} f)^*
    E_j(f^*) = -q^{-2} (F_j f)^*     (j != n; the sign flips for j = n)
    F_j(f^*) = -q^{2}  (E_j f)^*     (j != n; the sign flips for j = n)
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .algebra import AlgebraElement, QuantumMatrixAlgebra, _acc, _clean
from .coefficients import ONE, ZERO, LaurentPoly, exact_div, q_pow, s_pow
from .linalg import bareiss_rank

__all__ = [
    "UqGenerator",
    "NotAWeightVector",
    "generator_weight",
    "monomial_weight",
    "weight",
    "act_generator_on_z",
    "act",
    "act_word",
    "generate_module",
    "weyl_dimension",
    "serre_audit",
    "u_k_generators",
]

KINDS = ("E", "F", "K", "Kinv")


class NotAWeightVector(ValueError):
    """The element mixes monomials of different K-weights."""


@dataclass(frozen=True)
class UqGenerator:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def __str__(self):
        return f"{self.kind}_{self.index}"


def u_k_generators(n: int) -> list:
    """Raising and lowering generators of U_q k (all indices except ``n``)."""
    out = []
    for j in range(1, 2 * n):
        if j != n:
            out += [UqGenerator("E", j), UqGenerator("F", j)]
    return out


def _check_index(alg: QuantumMatrixAlgebra, g: UqGenerator):
    if not 1 <= g.index <= 2 * alg.n - 1:
        raise IndexError(f"{g} out of range for n={alg.n}")


def generator_weight(n: int, a: int, alpha: int) -> tuple:
    """K-exponents of ``z_a^alpha``: ``K_k z = q**w[k-1] z``."""
    w = []
    for k in range(1, 2 * n):
        if k < n:
            w.append((a == k) - (a == k + 1))
        elif k == n:
            w.append((a == n) + (alpha == n))
        else:
            w.append((alpha == 2 * n - k) - (alpha == 2 * n - k + 1))
    return tuple(w)


def _gen_weights(alg: QuantumMatrixAlgebra):
    cache = getattr(alg, "_gen_weights", None)
    if cache is None:
        cache = [generator_weight(alg.n, *alg.rc(g)) for g in range(alg.ngens)]
        alg._gen_weights = cache
    return cache


def monomial_weight(alg: QuantumMatrixAlgebra, mono) -> tuple:
    gw = _gen_weights(alg)
    h, a = mono
    w = [0] * (2 * alg.n - 1)
    for g in h:
        for i, x in enumerate(gw[g]):
            w[i] += x
    for g in a:
        for i, x in enumerate(gw[g]):
            w[i] -= x
    return tuple(w)


def weight(f: AlgebraElement) -> tuple:
    """Common K-weight of all monomials of ``f``."""
    if not f.terms:
        raise NotAWeightVector("zero has no weight")
    ws = {monomial_weight(f.alg, m) for m in f.terms}
    if len(ws) != 1:
        raise NotAWeightVector(f"monomials carry {len(ws)} different weights")
    return ws.pop()


# -- holomorphic generator tables -------------------------------------------

def _holo_gen_action(alg: QuantumMatrixAlgebra, kind: str, k: int, g: int) -> dict:
    """``X_k z_g`` as ``{holo word: coeff}`` for X in {E, F}."""
    n = alg.n
    a, al = alg.rc(g)
    s = s_pow(1)
    if k == n:
        if kind == "F":
            return {(): s} if a == n and al == n else {}
        nn = alg.gen(n, n)
        if a != n and al != n:
            return {w: -s * q_pow(-1) * c for w, c in alg.holo_mul((alg.gen(a, n),), (alg.gen(n, al),)).items()}
        if a == n and al == n:
            return {(nn, nn): -s}
        return {w: -s * c for w, c in alg.holo_mul((nn,), (g,)).items()}
    if kind == "F":
        if k < n and a == k:
            return {(alg.gen(a + 1, al),): s}
        if k > n and al == 2 * n - k:
            return {(alg.gen(a, al + 1),): s}
        return {}
    if k < n and a == k + 1:
        return {(alg.gen(a - 1, al),): s_pow(-1)}
    if k > n and al == 2 * n - k + 1:
        return {(alg.gen(a, al - 1),): s_pow(-1)}
    return {}


def _k_factor(alg, word, k, sign=1) -> LaurentPoly:
    gw = _gen_weights(alg)
    return q_pow(sign * sum(gw[g][k - 1] for g in word))


def _holo_word_action(alg: QuantumMatrixAlgebra, kind: str, k: int, word: tuple) -> dict:
    """E_k or F_k applied to the holomorphic monomial ``z^word`` via the coproduct."""
    cache = alg.__dict__.setdefault("_holo_act", {})
    key = (kind, k, word)
    hit = cache.get(key)
    if hit is not None:
        return hit
    out = {}
    if word:
        head, rest = word[0], word[1:]
        first = _holo_gen_action(alg, kind, k, head)
        if kind == "E":
            # E(x rest) = E(x) rest + K(x) E(rest)
            for w, c in first.items():
                for w2, c2 in alg.holo_mul(w, rest).items():
                    _acc(out, w2, c * c2)
            kx = _k_factor(alg, (head,), k)
            for w, c in _holo_word_action(alg, kind, k, rest).items():
                for w2, c2 in alg.holo_mul((head,), w).items():
                    _acc(out, w2, kx * c * c2)
        else:
            # F(x rest) = F(x) K^{-1}(rest) + x F(rest)
            kr = _k_factor(alg, rest, k, -1)
            for w, c in first.items():
                for w2, c2 in alg.holo_mul(w, rest).items():
                    _acc(out, w2, kr * c * c2)
            for w, c in _holo_word_action(alg, kind, k, rest).items():
                for w2, c2 in alg.holo_mul((head,), w).items():
                    _acc(out, w2, c * c2)
    out = _clean(out)
    cache[key] = out
    return out


def _anti_word_action(alg: QuantumMatrixAlgebra, kind: str, k: int, word: tuple) -> dict:
    """E_k or F_k applied to the starred monomial ``w(word) = (z^word)^*``."""
    n = alg.n
    sign = 1 if k == n else -1
    if kind == "E":
        pref = q_pow(-2) * sign
        other = "F"
    else:
        pref = q_pow(2) * sign
        other = "E"
    return {w: pref * c for w, c in _holo_word_action(alg, other, k, word).items()}


def act_generator_on_z(alg: QuantumMatrixAlgebra, g: UqGenerator, a: int, alpha: int) -> AlgebraElement:
    """Table value of a single generator on ``z_a^alpha``."""
    return act(g, alg.z(a, alpha))


def act(g: UqGenerator, f: AlgebraElement) -> AlgebraElement:
    """Action of one generator on an element of Pol(Mat_n)_q."""
    alg = f.alg
    _check_index(alg, g)
    k = g.index
    if g.kind in ("K", "Kinv"):
        sign = 1 if g.kind == "K" else -1
        out = {}
        for m, c in f.terms.items():
            out[m] = c * q_pow(sign * monomial_weight(alg, m)[k - 1])
        return AlgebraElement._raw(alg, out)
    out = {}
    for (h, a), c in f.terms.items():
        if g.kind == "E":
            # E(z^h w(a)) = E(z^h) w(a) + K(z^h) E(w(a))
            for h2, c2 in _holo_word_action(alg, "E", k, h).items():
                _acc(out, (h2, a), c * c2)
            kh = _k_factor(alg, h, k)
            for a2, c2 in _anti_word_action(alg, "E", k, a).items():
                _acc(out, (h, a2), c * kh * c2)
        else:
            # F(z^h w(a)) = F(z^h) K^{-1}(w(a)) + z^h F(w(a))
            ka = _k_factor(alg, a, k)  # K^{-1} on a starred word: q^{+weight(a)}
            for h2, c2 in _holo_word_action(alg, "F", k, h).items():
                _acc(out, (h2, a), c * ka * c2)
            for a2, c2 in _anti_word_action(alg, "F", k, a).items():
                _acc(out, (h, a2), c * c2)
    return AlgebraElement._raw(alg, _clean(out))


def act_word(alg: QuantumMatrixAlgebra, g: UqGenerator, word, coeff=ONE) -> AlgebraElement:
    """Coproduct expansion on a raw (not normal-ordered) word of generators.

    Each letter is acted on individually and the pieces are multiplied back
    together, so the result is independent of the normal-ordering rules.
    """
    letters = [alg.generator(x) for x in word]
    if g.kind in ("K", "Kinv"):
        out = alg.scalar(coeff)
        for x in letters:
            out = out * act(g, x)
        return out
    total = alg.element()
    kk = UqGenerator("K", g.index)
    kinv = UqGenerator("Kinv", g.index)
    for i in range(len(letters)):
        piece = alg.scalar(coeff)
        for j, x in enumerate(letters):
            if j == i:
                piece = piece * act(g, x)
            elif g.kind == "E":
                piece = piece * (act(kk, x) if j < i else x)
            else:
                piece = piece * (act(kinv, x) if j > i else x)
            if not piece:
                break
        total = total + piece
    return total


def weyl_dimension(nu) -> int:
    """Dimension of the GL_n irreducible with highest weight ``nu``."""
    n = len(nu)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= nu[i] - nu[j] + j - i
            den *= j - i
    return num // den


def _rank_in_space(vectors) -> int:
    keys = sorted({m for v in vectors for m in v.terms})
    rows = [[v.terms.get(m, ZERO) for m in keys] for v in vectors]
    return bareiss_rank(rows, ONE)


def generate_module(alg: QuantumMatrixAlgebra, nu, max_dim: int | None = None) -> list:
    """Basis of the U_q k-module generated by the highest weight vector ``v_nu``.

    Breadth-first application of ``E_j, F_j`` (``j != n``); a candidate is
    kept only when it raises the rank inside its weight space.
    """
    v = alg.highest_weight_vector(nu)
    basis = [v]
    by_weight = {weight(v): [v]}
    if max_dim is None:
        from math import comb

        max_dim = comb(alg.ngens + sum(nu) - 1, sum(nu)) if sum(nu) else 1
    queue = deque([v])
    gens = u_k_generators(alg.n)
    while queue:
        cur = queue.popleft()
        for g in gens:
            w = act(g, cur)
            if not w:
                continue
            wt = weight(w)
            space = by_weight.setdefault(wt, [])
            if _rank_in_space(space + [w]) > len(space):
                space.append(w)
                basis.append(w)
                queue.append(w)
                if len(basis) > max_dim:
                    raise RuntimeError("module generation exceeded the ambient dimension")
    return basis


def _q_integer(w: int) -> LaurentPoly:
    """``(q^w - q^{-w}) / (q - q^{-1})``."""
    return exact_div(q_pow(w) - q_pow(-w), q_pow(1) - q_pow(-1))


def _normal_monomials(alg, dmax):
    for total in range(dmax + 1):
        for hd in range(total + 1):
            for h in alg.holo_monomials(hd):
                for a in alg.holo_monomials(total - hd):
                    yield alg.monomial(h, a)


def serre_audit(alg: QuantumMatrixAlgebra, dmax: int) -> bool:
    """Check every Drinfeld-Jimbo relation as an operator identity on all
    normal monomials of total degree ``<= dmax``."""
    r = 2 * alg.n - 1

    def E(i, f):
        return act(UqGenerator("E", i), f)

    def F(i, f):
        return act(UqGenerator("F", i), f)

    def K(i, f):
        return act(UqGenerator("K", i), f)

    def Kinv(i, f):
        return act(UqGenerator("Kinv", i), f)

    def cartan(i, j):
        return 2 if i == j else (-1 if abs(i - j) == 1 else 0)

    qq = q_pow(1) + q_pow(-1)
    for f in _normal_monomials(alg, dmax):
        wt = weight(f)
        for i in range(1, r + 1):
            if K(i, Kinv(i, f)) != f or Kinv(i, K(i, f)) != f:
                return False
            for j in range(1, r + 1):
                if K(i, K(j, f)) != K(j, K(i, f)):
                    return False
                a = cartan(i, j)
                if K(i, E(j, f)) != E(j, K(i, f)) * q_pow(a):
                    return False
                if K(i, F(j, f)) != F(j, K(i, f)) * q_pow(-a):
                    return False
                lhs = E(i, F(j, f)) - F(j, E(i, f))
                rhs = f * _q_integer(wt[i - 1]) if i == j else alg.element()
                if lhs != rhs:
                    return False
                if abs(i - j) == 1:
                    if E(i, E(i, E(j, f))) - E(i, E(j, E(i, f))) * qq + E(j, E(i, E(i, f))):
                        return False
                    if F(i, F(i, F(j, f))) - F(i, F(j, F(i, f))) * qq + F(j, F(i, F(i, f))):
                        return False
                elif i != j:
                    if E(i, E(j, f)) != E(j, E(i, f)) or F(i, F(j, f)) != F(j, F(i, f)):
                        return False
    return True

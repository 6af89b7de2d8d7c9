"""Commutative side: symmetric polynomials, factorial Schur polynomials and
Knop's interpolation polynomials, plus the closed-form spectral values."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .coefficients import (
    ONE,
    Q,
    LaurentPoly,
    RationalFunction,
    exact_div,
    q_pow,
    rational_limit_at_one,
    s_pow,
)
from .linalg import SingularSystem, bareiss_det, leibniz_det, solve
from .partitions import (
    Partition,
    dominance_leq,
    enumerate_partitions,
    knop_bar,
    ones,
    spec_points,
)

__all__ = [
    "MultiPoly",
    "RepeatedPoints",
    "SingularSystem",
    "monomial_symmetric",
    "factorial_schur_classical",
    "q_factorial_schur_at",
    "q_factorial_schur_eval",
    "q_factorial_schur_symbolic",
    "knop_interpolation",
    "knop_residuals",
    "prop4_sides",
    "prop4_check",
    "rhs_theorem1",
    "rhs_theorem2",
    "lemma3_sides",
    "lemma3_check",
    "lemma4_sides",
    "lemma4_check",
    "qpochhammer",
    "classical_limit",
]

Q2 = s_pow(4)


class RepeatedPoints(ValueError):
    """Alternant evaluation at coinciding points."""


class MultiPoly:
    """Sparse commutative polynomial in ``x_1..x_n``.

    Coefficients may be ``Fraction``, :class:`LaurentPoly` or
    :class:`RationalFunction`; they are never stored when zero.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, terms, nvars: int):
        self.nvars = nvars
        self.terms = {tuple(e): c for e, c in terms.items() if c}

    @classmethod
    def constant(cls, c, nvars: int) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): Fraction(1)}, nvars)

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(other, self.nvars)

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t[e] + c if e in t else c
        return MultiPoly(t, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if not other:
                return MultiPoly({}, self.nvars)
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.nvars)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                t[e] = t[e] + p if e in t else p
        return MultiPoly(t, self.nvars)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            other = self._lift(other)
        return not (self - other).terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point):
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def scale_variables(self, factor):
        """Substitute ``x_i -> factor * x_i`` for all ``i``."""
        return MultiPoly(
            {e: c * factor ** sum(e) for e, c in self.terms.items()}, self.nvars
        )

    def permute(self, perm) -> "MultiPoly":
        return MultiPoly(
            {tuple(e[perm[i]] for i in range(self.nvars)): c for e, c in self.terms.items()},
            self.nvars,
        )

    def is_symmetric(self) -> bool:
        return all(
            self.permute(p) == self for p in permutations(range(self.nvars))
        )

    def map_coefficients(self, f) -> "MultiPoly":
        return MultiPoly({e: f(c) for e, c in self.terms.items()}, self.nvars)

    def coefficient_in_m(self, mu):
        """Coefficient of the monomial whose exponent is ``mu`` itself."""
        return self.terms.get(tuple(mu), 0)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k
            )
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def to_json(self) -> list:
        out = []
        for e, c in sorted(self.terms.items()):
            out.append([list(e), _coeff_json(c)])
        return out


def _coeff_json(c):
    if isinstance(c, (LaurentPoly, RationalFunction)):
        return c.to_json()
    return str(c)


def monomial_symmetric(lam, nvars: int | None = None) -> MultiPoly:
    """``m_lam``: sum over the distinct rearrangements of ``lam``."""
    lam = tuple(lam)
    n = len(lam) if nvars is None else nvars
    lam = lam + (0,) * (n - len(lam))
    orbit = set(permutations(lam))
    return MultiPoly({e: Fraction(1) for e in orbit}, n)


# -- factorial Schur polynomials ------------------------------------------------

def _vandermonde_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def factorial_schur_classical(nu, x) -> Fraction:
    """Falling-factorial alternant over the Vandermonde, at distinct rationals."""
    n = len(nu)
    x = [Fraction(v) for v in x]
    if len(set(x)) != n:
        raise RepeatedPoints(str(x))
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            p = Fraction(1)
            for m in range(nu[j] + n - j - 1):
                p *= x[i] - m
            row.append(p)
        mat.append(row)
    det = leibniz_det(mat, Fraction(0), Fraction(1))
    vdm = Fraction(1)
    for i, j in _vandermonde_pairs(n):
        vdm *= x[i] - x[j]
    return det / vdm


def qpochhammer(a, k: int) -> LaurentPoly:
    """``(a)_k = prod_{i<k} (a - q**(2i))``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = ONE
    for i in range(k):
        out = out * (a - q_pow(2 * i))
    return out


def q_factorial_schur_at(nu, points, base=Q2) -> LaurentPoly:
    """Value of the q-factorial Schur alternant (factors ``x - base**m``)."""
    n = len(nu)
    pts = [LaurentPoly(p) for p in points]
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            p = ONE
            for m in range(nu[j] + n - j - 1):
                p = p * (pts[i] - base**m)
            row.append(p)
        mat.append(row)
    det = bareiss_det(mat, ONE)
    for i, j in _vandermonde_pairs(n):
        diff = pts[i] - pts[j]
        if not diff:
            raise RepeatedPoints(str(points))
        det = exact_div(det, diff)
    return det


def q_factorial_schur_eval(nu, lam) -> LaurentPoly:
    """``s_nu(q^{2(lam + delta)}; q^2)``."""
    nu, lam = Partition(nu), Partition(lam)
    if nu.n != lam.n:
        raise ValueError("nu and lam must have the same length")
    return q_factorial_schur_at(nu, spec_points(lam), Q2)


def _divide_by_difference(p: MultiPoly, i: int, j: int) -> MultiPoly:
    """Exact quotient of ``p`` by ``x_i - x_j`` (synthetic division in ``x_i``)."""
    n = p.nvars
    by_power = {}
    for e, c in p.terms.items():
        k = e[i]
        rest = e[:i] + (0,) + e[i + 1:]
        by_power.setdefault(k, {})[rest] = c
    if not by_power:
        return p
    top = max(by_power)
    xj = MultiPoly.variable(j, n)
    coeffs = {k: MultiPoly(by_power.get(k, {}), n) for k in range(top + 1)}
    quot = {}
    carry = MultiPoly({}, n)
    for k in range(top, 0, -1):
        carry = coeffs[k] + xj * carry
        quot[k - 1] = carry
    remainder = coeffs[0] + xj * carry
    if remainder:
        from .coefficients import NotDivisible

        raise NotDivisible(f"not divisible by x{i + 1} - x{j + 1}")
    out = {}
    for k, poly in quot.items():
        for e, c in poly.terms.items():
            e2 = e[:i] + (e[i] + k,) + e[i + 1:]
            out[e2] = out[e2] + c if e2 in out else c
    return MultiPoly(out, n)


def q_factorial_schur_symbolic(nu, n: int | None = None, base=Q2) -> MultiPoly:
    """The q-factorial Schur polynomial as a polynomial in ``x_1..x_n``."""
    nu = Partition(nu, n)
    n = nu.n
    mat = []
    for i in range(n):
        xi = MultiPoly.variable(i, n)
        row = []
        for j in range(n):
            p = MultiPoly.constant(ONE, n)
            for m in range(nu[j] + n - j - 1):
                p = p * (xi - base**m)
            row.append(p)
        mat.append(row)
    det = leibniz_det(mat, MultiPoly({}, n), MultiPoly.constant(ONE, n))
    for i, j in _vandermonde_pairs(n):
        det = _divide_by_difference(det, i, j)
    return det


# -- interpolation polynomials --------------------------------------------------

def _to_field(c):
    if isinstance(c, (LaurentPoly, RationalFunction)):
        return RationalFunction.coerce(c)
    return c


def _from_field(c):
    if isinstance(c, RationalFunction) and c.is_laurent():
        return c.num
    return c


def knop_interpolation(lam, qv, tv) -> MultiPoly:
    """The monic interpolation polynomial vanishing at all other nodes.

    ``qv``/``tv`` are nonzero rationals, or Laurent polynomials in ``s`` for
    the symbolic mode.  Raises :class:`SingularSystem` when the vanishing
    conditions do not determine the polynomial uniquely.
    """
    lam = Partition(lam)
    n, w = lam.n, lam.weight
    symbolic = isinstance(qv, LaurentPoly) or isinstance(tv, LaurentPoly)
    universe = enumerate_partitions(n, w)
    unknowns = [mu for mu in universe if mu != lam and dominance_leq(mu, lam)]
    conditions = [mu for mu in universe if mu != lam]
    m_lam = monomial_symmetric(lam)
    m_basis = [monomial_symmetric(mu) for mu in unknowns]
    if not unknowns:
        if any(m_lam.evaluate(knop_bar(mu, qv, tv)) for mu in conditions):
            raise SingularSystem("no conditions can be met by m_lam alone")
        result = m_lam
    else:
        rows, rhs = [], []
        for mu in conditions:
            pt = knop_bar(mu, qv, tv)
            rows.append([_to_field(m.evaluate(pt)) for m in m_basis])
            rhs.append(_to_field(-m_lam.evaluate(pt)))
        if symbolic:
            rows = [[RationalFunction.coerce(x) for x in r] for r in rows]
            rhs = [RationalFunction.coerce(x) for x in rhs]
        coeffs = solve(rows, rhs)
        result = m_lam
        for c, m in zip(coeffs, m_basis):
            result = result + m * _from_field(c)
    if symbolic:
        result = result.map_coefficients(_from_field)
    return result


def knop_residuals(p: MultiPoly, lam, qv, tv) -> list:
    """Values of ``p`` at every node ``mu_bar`` with ``|mu| <= |lam|``, ``mu != lam``."""
    lam = Partition(lam)
    return [
        p.evaluate(knop_bar(mu, qv, tv))
        for mu in enumerate_partitions(lam.n, lam.weight)
        if mu != lam
    ]


def prop4_sides(lam, n: int | None = None):
    """Both sides of ``P_lam(z; q, q) = q^{-(n-1)|lam|} s_lam(q^{n-1} z; q)``."""
    lam = Partition(lam, n)
    n = lam.n
    lhs = knop_interpolation(lam, Q, Q)
    rhs = q_factorial_schur_symbolic(lam, n, base=Q).scale_variables(q_pow(n - 1))
    rhs = rhs * q_pow(-(n - 1) * lam.weight)
    return lhs, rhs


def prop4_check(lam, n: int | None = None) -> bool:
    lhs, rhs = prop4_sides(lam, n)
    return lhs == rhs


# -- closed-form spectral values ------------------------------------------------

def _minus_q_power(k: int) -> LaurentPoly:
    return q_pow(k) * (-1) ** k


def theorem1_constant(nu) -> int:
    n = len(nu)
    return -sum(v * (v + 2 * n - 2 * (i + 1)) for i, v in enumerate(nu))


def rhs_theorem1(nu, lam) -> LaurentPoly:
    """``(-q)^{|nu|} q^{const} s_nu(q^{2(lam+delta)}; q^2)``."""
    nu = Partition(nu)
    return (
        _minus_q_power(nu.weight)
        * q_pow(theorem1_constant(nu))
        * q_factorial_schur_eval(nu, lam)
    )


def rhs_theorem2(k: int, lam, n: int | None = None) -> LaurentPoly:
    lam = Partition(lam, n)
    n = lam.n
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    pref = _minus_q_power(k) * q_pow(-k * k - 2 * k * (n - k))
    return pref * q_factorial_schur_eval(ones(k, n), lam)


def lemma3_sides(nu):
    nu = Partition(nu)
    n = nu.n
    if not n or nu[-1] <= 0:
        raise ValueError("requires nu_n > 0")
    lhs = q_factorial_schur_eval(nu, nu)
    lower = nu.minus_ones()
    rhs = (
        q_pow(2 * nu.weight - 2 * n)
        * q_factorial_schur_at(ones(n, n), spec_points(nu))
        * q_factorial_schur_at(lower, spec_points(lower))
    )
    return lhs, rhs


def lemma3_check(nu) -> bool:
    lhs, rhs = lemma3_sides(nu)
    return lhs == rhs


def lemma4_sides(nu):
    nu = Partition(nu)
    if not nu.n or nu[-1] != 0:
        raise ValueError("requires nu_n = 0")
    lhs = q_factorial_schur_eval(nu, nu)
    short = nu.drop_last()
    rhs = q_pow(2 * nu.weight) * q_factorial_schur_eval(short, short)
    return lhs, rhs


def lemma4_check(nu) -> bool:
    lhs, rhs = lemma4_sides(nu)
    return lhs == rhs


def classical_limit(value, nu) -> Fraction:
    """``lim_{q->1} value / (1 - q^2)^{|nu|}``."""
    denom = (ONE - Q * Q) ** Partition(nu).weight
    return rational_limit_at_one(RationalFunction.coerce(value) / denom)

"""Exact dense linear algebra over fields and over the Laurent ring."""

from __future__ import annotations

from itertools import permutations

from .coefficients import LaurentPoly, exact_div

__all__ = [
    "SingularSystem",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "inverse",
    "bareiss_det",
    "bareiss_rank",
    "leibniz_det",
    "perm_sign",
]


class SingularSystem(ArithmeticError):
    """A linear system has no solution or no unique solution."""


def rref(rows, one=None):
    """Reduced row echelon form over a field.

    ``rows`` is a list of lists whose entries support ``+ - * /`` (``Fraction``
    or :class:`RationalFunction`).  Returns ``(matrix, pivot_columns)``.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv_pivot = 1 / m[r][c] if one is None else one / m[r][c]
        m[r] = [x * inv_pivot if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows, ncols: int, zero, one):
    """Basis of ``{x : rows @ x == 0}`` as a list of column vectors."""
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for r, pc in enumerate(pivots):
            x[pc] = -m[r][f]
        basis.append(x)
    return basis


def solve(a, b):
    """Unique solution of ``a @ x == b`` for square or overdetermined ``a``.

    Raises :class:`SingularSystem` when the columns are dependent or the
    system is inconsistent.
    """
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        raise SingularSystem("inconsistent system")
    if pivots != list(range(ncols)):
        raise SingularSystem("system is not uniquely solvable")
    return [m[i][ncols] for i in range(ncols)]


def inverse(a, zero, one):
    k = len(a)
    aug = [list(row) + [one if i == j else zero for j in range(k)] for i, row in enumerate(a)]
    m, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise SingularSystem("matrix is singular")
    return [row[k:] for row in m]


def perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def leibniz_det(m, zero, one):
    """Permutation-expansion determinant; works over any commutative ring."""
    k = len(m)
    total = zero
    for p in permutations(range(k)):
        term = one
        for i in range(k):
            term = term * m[i][p[i]]
            if not term:
                break
        if term:
            total = total + term if perm_sign(p) > 0 else total - term
    return total


def _ring_div(a, b):
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        return exact_div(a, b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    return a / b


def _bareiss(m, one):
    """Fraction-free elimination in place; returns (rank, sign)."""
    rows, cols = len(m), len(m[0]) if m else 0
    prev = one
    sign = 1
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = _ring_div(piv * m[i][j] - m[i][c] * m[r][j], prev)
            m[i][c] = m[i][c] * 0
        prev = piv
        r += 1
        if r == rows:
            break
    return r, sign


def bareiss_rank(rows, one) -> int:
    """Rank of a matrix over an integral domain, by fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    return _bareiss(m, one)[0]


def bareiss_det(rows, one):
    m = [list(r) for r in rows]
    k = len(m)
    if k == 0:
        return one
    rk, sign = _bareiss(m, one)
    if rk < k:
        return one * 0
    return m[k - 1][k - 1] if sign > 0 else -m[k - 1][k - 1]

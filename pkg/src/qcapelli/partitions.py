"""Partitions with at most ``n`` parts, stored with explicit trailing zeros."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .coefficients import LaurentPoly, s_pow

__all__ = [
    "Partition",
    "dominance_leq",
    "enumerate_partitions",
    "partitions_of",
    "count_partitions",
    "spec_points",
    "knop_bar",
    "ones",
    "staircase",
]


class Partition(tuple):
    """A weakly decreasing tuple of ``n`` nonnegative integers."""

    def __new__(cls, parts, n: int | None = None):
        parts = [int(p) for p in parts]
        if n is not None:
            if len(parts) > n:
                if any(parts[n:]):
                    raise ValueError(f"{parts} has more than {n} nonzero parts")
                parts = parts[:n]
            parts = parts + [0] * (n - len(parts))
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Partition":
        text = text.strip().strip("()[]")
        parts = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
        return cls(parts, n)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def minus_ones(self, a: int = 1) -> "Partition":
        """``lam - a * 1^n``."""
        return Partition([p - a for p in self])

    def drop_last(self) -> "Partition":
        return Partition(self[:-1])

    def shifted(self) -> tuple:
        """``lam + delta`` with ``delta = (n-1, ..., 1, 0)``."""
        n = len(self)
        return tuple(p + n - 1 - i for i, p in enumerate(self))

    def contains(self, other) -> bool:
        return all(a >= b for a, b in zip(self, other))

    def __str__(self):
        return ",".join(str(p) for p in self)

    def __repr__(self):
        return f"Partition(({', '.join(map(str, self))}))"


def ones(k: int, n: int) -> Partition:
    return Partition([1] * k + [0] * (n - k))


def staircase(n: int) -> tuple:
    return tuple(range(n - 1, -1, -1))


def dominance_leq(mu, lam) -> bool:
    """``mu <= lam``: every partial sum of ``mu`` is at most that of ``lam``."""
    if len(mu) != len(lam):
        raise ValueError("partitions of different length")
    a = b = 0
    for x, y in zip(mu, lam):
        a += x
        b += y
        if a > b:
            return False
    return True


def _with_sum(total: int, n: int, largest: int):
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * n < total:
            break
        for rest in _with_sum(total - first, n - 1, first):
            yield (first,) + rest


def partitions_of(total: int, n: int) -> list:
    """Partitions of ``total`` into at most ``n`` parts, reverse-lexicographic."""
    return [Partition(p) for p in _with_sum(total, n, total)]


def enumerate_partitions(n: int, max_weight: int) -> list:
    """All ``lam`` in Lambda_n with ``|lam| <= max_weight``, graded then revlex."""
    out = []
    for w in range(max_weight + 1):
        out.extend(partitions_of(w, n))
    return out


@lru_cache(maxsize=None)
def count_partitions(total: int, n: int) -> int:
    """Number of partitions of ``total`` into at most ``n`` parts (recurrence)."""
    if total == 0:
        return 1
    if n == 0 or total < 0:
        return 0
    return count_partitions(total, n - 1) + count_partitions(total - n, n)


def spec_points(lam) -> list:
    """The nodes ``q**(2*(lam_i + n - i))`` as Laurent monomials in ``s``."""
    return [s_pow(4 * x) for x in Partition(lam).shifted()]


def knop_bar(lam, qv, tv) -> list:
    """``(q**lam_1, q**lam_2 / t, ..., q**lam_n / t**(n-1))``.

    ``qv``/``tv`` may be rationals or Laurent polynomials (symbolic mode).
    """
    if not qv or not tv:
        raise ValueError("q and t must be nonzero")
    out = []
    for i, p in enumerate(lam):
        if isinstance(qv, LaurentPoly) or isinstance(tv, LaurentPoly):
            out.append(LaurentPoly(qv) ** p * LaurentPoly(tv) ** (-i))
        else:
            out.append(Fraction(qv) ** p * Fraction(tv) ** (-i))
    return out

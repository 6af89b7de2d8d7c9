"""Exact scalars: Laurent polynomials in ``s = q**(1/2)`` and their fractions.

All quantities live over the rationals.  The formal variable is ``s`` with
``s**2 == q``; integer powers of ``q`` therefore sit on even exponents.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "NotDivisible",
    "PoleAtOne",
    "S",
    "Q",
    "ONE",
    "ZERO",
    "q_pow",
    "s_pow",
    "exact_div",
    "eval_at",
    "eval_q",
    "rational_limit_at_one",
]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class PoleAtOne(ArithmeticError):
    """Raised when a reduced rational function has a pole at ``s = 1``."""


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class LaurentPoly:
    """Sparse Laurent polynomial ``sum c_k s**k`` with rational coefficients.

    Instances are immutable; zero coefficients are never stored, so two equal
    polynomials have identical term dictionaries.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._t = {}
        elif isinstance(terms, LaurentPoly):
            self._t = terms._t
        elif isinstance(terms, dict):
            t = {}
            for k, c in terms.items():
                c = _frac(c)
                if c:
                    t[int(k)] = c
            self._t = t
        else:
            c = _frac(terms)
            self._t = {0: c} if c else {}
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = object.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        c = _frac(c)
        return cls._raw({k: c} if c else {})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def __bool__(self):
        return bool(self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant(self) -> Fraction:
        return self._t.get(0, Fraction(0))

    def min_exp(self) -> int:
        return min(self._t)

    def max_exp(self) -> int:
        return max(self._t)

    def coeff(self, k: int) -> Fraction:
        return self._t.get(k, Fraction(0))

    def has_odd_powers(self) -> bool:
        return any(k % 2 for k in self._t)

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._t:
            return self
        if not self._t:
            return o
        t = dict(self._t)
        for k, c in o._t.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v += c
                if v:
                    t[k] = v
                else:
                    del t[k]
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(b) == 1:
            ((kb, cb),) = b.items()
            return LaurentPoly._raw({k + kb: c * cb for k, c in a.items()})
        if len(a) == 1:
            ((ka, ca),) = a.items()
            return LaurentPoly._raw({k + ka: c * ca for k, c in b.items()})
        t = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                t[k] = t.get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if len(self._t) != 1:
                raise ZeroDivisionError("only monomials are units in the Laurent ring")
            ((k, c),) = self._t.items()
            return LaurentPoly._raw({k * e: c**e})
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError
            return LaurentPoly._raw({k: c / other for k, c in self._t.items()})
        if isinstance(other, LaurentPoly):
            return RationalFunction(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(o, self)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: Fraction(other)} if other else {})
        if isinstance(other, RationalFunction):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``s**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def subs_s(self, value):
        """Evaluate at ``s = value`` where ``value`` is any ring element."""
        result = ZERO if isinstance(value, LaurentPoly) else 0
        for k, c in self._t.items():
            result = result + c * value**k
        return result

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for k, c in sorted(self._t.items(), reverse=True):
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "s"
            else:
                mono = f"s^{k}"
            if mono and abs(c) == 1:
                body = mono
            else:
                cs = str(abs(c))
                if "/" in cs and mono:
                    cs = f"({cs})"
                body = cs + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        return [[k, str(c)] for k, c in sorted(self._t.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({int(k): Fraction(c) for k, c in data})


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: Fraction(1)})
S = LaurentPoly._raw({1: Fraction(1)})
Q = LaurentPoly._raw({2: Fraction(1)})


def s_pow(k: int) -> LaurentPoly:
    return LaurentPoly._raw({k: Fraction(1)})


def q_pow(k) -> LaurentPoly:
    """``q**k``; half-integer ``k`` is allowed (``q**(1/2) == s``)."""
    k2 = Fraction(k) * 2
    if k2.denominator != 1:
        raise ValueError(f"q**{k} is not a power of s")
    return LaurentPoly._raw({int(k2): Fraction(1)})


# -- dense univariate helpers (ascending coefficient lists over Q) -------------

def _to_dense(p: LaurentPoly):
    """Split ``p = s**v * P(s)`` with ``P(0) != 0``; return ``(v, coeffs)``."""
    v = p.min_exp()
    d = [Fraction(0)] * (p.max_exp() - v + 1)
    for k, c in p._t.items():
        d[k - v] = c
    return v, d


def _from_dense(v: int, d) -> LaurentPoly:
    return LaurentPoly._raw({i + v: c for i, c in enumerate(d) if c})


def _trim(d):
    while d and not d[-1]:
        d.pop()
    return d


def _divmod_dense(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    qt = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            f = c / lead
            qt[i - db] = f
            for j in range(db + 1):
                a[i - db + j] -= f * b[j]
    return _trim(qt), _trim(a[:db])


def _gcd_dense(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``c`` with ``a == b * c`` or raise :class:`NotDivisible`."""
    if not b:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not a:
        return ZERO
    if b.is_monomial():
        ((k, c),) = b._t.items()
        return LaurentPoly._raw({e - k: v / c for e, v in a._t.items()})
    va, da = _to_dense(a)
    vb, db = _to_dense(b)
    qt, r = _divmod_dense(da, db)
    if r:
        raise NotDivisible(f"({a}) / ({b})")
    return _from_dense(va - vb, qt)


def eval_at(a: LaurentPoly, v) -> Fraction:
    """Evaluate ``a`` at ``s = v`` exactly."""
    v = _frac(v)
    if v == 0:
        if any(k < 0 for k in a._t):
            raise ZeroDivisionError("negative powers of s at s = 0")
        return a.constant()
    return sum((c * v**k for k, c in a._t.items()), Fraction(0))


def eval_q(a, qv) -> Fraction:
    """Evaluate at a rational value of ``q``; odd powers of ``s`` are rejected."""
    qv = _frac(qv)
    if isinstance(a, RationalFunction):
        return eval_q(a.num, qv) / eval_q(a.den, qv)
    if isinstance(a, (int, Fraction)):
        return Fraction(a)
    if a.has_odd_powers():
        raise ValueError("value involves q**(1/2); cannot evaluate at rational q")
    return sum((c * qv ** (k // 2) for k, c in a._t.items()), Fraction(0))


class RationalFunction:
    """Reduced quotient ``num/den`` of Laurent polynomials.

    Canonical form: ``den`` is an ordinary polynomial with nonzero constant
    term and leading coefficient 1, coprime to ``num``.  Equality is therefore
    syntactic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly(num)
        den = den if isinstance(den, LaurentPoly) else LaurentPoly(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return cls._raw(x, ONE)
        return cls._raw(LaurentPoly(x), ONE)

    def is_laurent(self) -> bool:
        return self.den == ONE

    def to_laurent(self) -> LaurentPoly:
        if self.den != ONE:
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        return self.num

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            if self.den == ONE:
                return RationalFunction._raw(self.num + o.num, ONE)
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RationalFunction._raw(ZERO, ONE)
        if self.den == ONE and o.den == ONE:
            return RationalFunction._raw(self.num * o.num, ONE)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return RationalFunction(ONE) / self ** (-e)
        return RationalFunction._raw(self.num**e, self.den**e) if e else RationalFunction._raw(ONE, ONE)

    def __eq__(self, other):
        o = _as_rf(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def reduce(self) -> "RationalFunction":
        return RationalFunction(self.num, self.den)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunction._raw(x, ONE)
    if isinstance(x, (int, Fraction)):
        return RationalFunction._raw(LaurentPoly(x), ONE)
    return None


def _reduce(num: LaurentPoly, den: LaurentPoly):
    if not num:
        return ZERO, ONE
    if den.is_monomial():
        ((k, c),) = den._t.items()
        return LaurentPoly._raw({e - k: v / c for e, v in num._t.items()}), ONE
    vn, dn = _to_dense(num)
    vd, dd = _to_dense(den)
    g = _gcd_dense(dn, dd)
    if len(g) > 1:
        dn, r1 = _divmod_dense(dn, g)
        dd, r2 = _divmod_dense(dd, g)
        assert not r1 and not r2
    lead = dd[-1]
    if lead != 1:
        dn = [c / lead for c in dn]
        dd = [c / lead for c in dd]
    return _from_dense(vn - vd, dn), _from_dense(0, dd)


def rational_limit_at_one(r) -> Fraction:
    """Value at ``s = 1`` (equivalently ``q = 1``) after full reduction."""
    r = RationalFunction.coerce(r)
    d = eval_at(r.den, 1)
    if d == 0:
        raise PoleAtOne(str(r))
    return eval_at(r.num, 1) / d

"""
Exact coefficients in s = q^(1/2)
==================================

Every coefficient in the package is a Laurent polynomial in ``s`` with
rational coefficients, or a reduced quotient of two of them.
"""

from fractions import Fraction

from qcapelli import q_pow
from qcapelli.coefficients import eval_q
from qcapelli.report import format_q

# q itself is s^2; half-integer powers of q are allowed
q = q_pow(1)
x = (1 - q_pow(2)) * (1 + q_pow(Fraction(1, 2)))
print("x       =", x)
print("in q    :", format_q(x))

# division gives a rational function, reduced by a polynomial gcd
r = (q_pow(4) - 1) / (q - 1)
print("(q^4-1)/(q-1) =", format_q(r), "| laurent:", r.is_laurent())

# numeric specialisation stays exact
print("at q=1/2:", eval_q(1 - q_pow(3), Fraction(1, 2)))

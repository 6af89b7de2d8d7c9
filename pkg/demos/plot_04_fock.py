"""
The Fock representation and its Gram matrices
=============================================

Starred generators annihilate the vacuum ``f0``. The invariant form is read
off as the vacuum coefficient.
"""

from fractions import Fraction

from qcapelli import algebra
from qcapelli.coefficients import eval_q
from qcapelli.fock import FockVector, apply, fock_form, gram, is_positive_definite, monomial_basis
from qcapelli.report import format_q

A = algebra(1)
z = A.z(1, 1)
for m in range(1, 5):
    v = FockVector(z**m)
    print(f"z* z^{m} f0 = {apply(A.zstar(1, 1), v)}   (z^{m}, z^{m}) = {format_q(fock_form(v, v))}")

A = algebra(2)
g = gram(monomial_basis(A, 2))
print("degree-2 Gram matrix at q=1/2 (diagonal):")
print([str(eval_q(g[i][i], Fraction(1, 2))) for i in range(len(g))])
print("positive definite:", is_positive_definite(g))

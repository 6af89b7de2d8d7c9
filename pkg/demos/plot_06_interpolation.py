"""
Interpolation polynomials and q -> 1
====================================

Knop's interpolation polynomial is pinned down by vanishing at lower nodes.
At ``t = q`` it is a rescaled q-factorial Schur polynomial. Letting ``q -> 1``
in the spectrum recovers the classical factorial Schur values.
"""

from fractions import Fraction

from qcapelli import eigenvalue, knop_interpolation
from qcapelli.symmetric import classical_limit, factorial_schur_classical, knop_residuals, prop4_check

lam = (2, 1, 0)
p = knop_interpolation(lam, Fraction(1, 2), Fraction(1, 3))
print("P_(2,1,0)(z; 1/2, 1/3) has", len(p.terms), "terms")
print("residuals at lower nodes:", knop_residuals(p, lam, Fraction(1, 2), Fraction(1, 3)))
print("t = q specialisation matches q-factorial Schur:", prop4_check(lam))

for nu, lam in [((1, 0), (2, 1)), ((1, 1), (2, 1)), ((2, 0), (3, 0))]:
    lim = classical_limit(eigenvalue(nu, lam), nu)
    shifted = (lam[0] + 1, lam[1])
    print(f"nu={nu} lambda={lam}: limit {lim}, factorial Schur {factorial_schur_classical(nu, shifted)}")

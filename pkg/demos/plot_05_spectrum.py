"""
Spectrum of the invariants y_nu
===============================

``y_nu`` acts on each isotypic component ``H_lambda`` by a scalar. The
scalar is a q-factorial Schur polynomial evaluated at ``q^(2(lambda+delta))``,
up to a power of ``-q``.
"""

from qcapelli import build_y, eigenvalue, rhs_theorem1
from qcapelli.coefficients import RationalFunction
from qcapelli.partitions import enumerate_partitions
from qcapelli.report import format_q

print("y_(1,1) =", build_y((1, 1)).element)
print()
print(f"{'nu':>6} {'lambda':>7}  eigenvalue")
for nu in enumerate_partitions(2, 2):
    for lam in enumerate_partitions(2, 3):
        ev = eigenvalue(nu, lam)
        agree = RationalFunction.coerce(ev) == rhs_theorem1(nu, lam)
        print(f"{str(nu):>6} {str(lam):>7}  {format_q(ev)}  [{'ok' if agree else 'MISMATCH'}]")

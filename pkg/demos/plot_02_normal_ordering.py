"""
Normal ordering in Pol(Mat_n)_q
===============================

Words in the generators are rewritten to holomorphic-then-antiholomorphic
normal form. The cross relation between ``z*`` and ``z`` is the interesting
one.
"""

from qcapelli import algebra
from qcapelli.audits import pbw_audit

A = algebra(1)
z, zs = A.z(1, 1), A.zstar(1, 1)
# the q-oscillator relation
print("n=1: z* z =", zs * z)

A = algebra(2)
print("n=2: z11* z11 =", A.zstar(1, 1) * A.z(1, 1))
print("      z22 z11 =", A.z(2, 2) * A.z(1, 1))

# the quantum determinant and the star involution
d = A.qdet()
print("det_q       =", d)
print("det_q^*     =", d.star())

# normal monomials of each degree are a basis
for deg in range(4):
    print(f"degree {deg}: {len(A.holo_monomials(deg))} monomials, audit ok = {pbw_audit(A, deg)}")

"""
U_q k-modules inside the holomorphic polynomials
================================================

Acting with ``E_j, F_j`` (``j != n``) on a product of principal q-minors
sweeps out a module whose dimension is the square of a Weyl dimension.
"""

from qcapelli import algebra
from qcapelli.action import UqGenerator, act, generate_module, weight, weyl_dimension
from qcapelli.partitions import enumerate_partitions

A = algebra(2)
v = A.highest_weight_vector((2, 1))
print("v_(2,1) =", v)
print("weight  =", weight(v))
print("E_1 v   =", act(UqGenerator("E", 1), v))
print("F_1 v   =", act(UqGenerator("F", 1), v))

for nu in enumerate_partitions(2, 3):
    basis = generate_module(A, nu)
    print(f"nu={nu}: dim {len(basis)}, Weyl^2 {weyl_dimension(nu) ** 2}")

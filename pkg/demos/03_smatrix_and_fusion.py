"""
S-matrix and fusion rules of C^{2,2}
====================================

The S-matrix comes from symplectic characters evaluated at shifted roots of
unity.  Its first column is the list of dimensions, and S times its Galois
conjugate is a multiple of the identity: the category is modular.  The
Verlinde formula then produces integral fusion coefficients.
"""

from bcdcat.partitions import Partition
from bcdcat.series import make_spec
from bcdcat.smatrix import build_smatrix, fusion_from_S, killing_check

spec = make_spec("C", 2, 2)
sm = build_smatrix(spec)  # fails loudly if S is not symmetric or not invertible
print("labels:", " ".join(map(str, sm.labels)))
print("<omega> =", sm.omega, "~", round(sm.omega.approx().real, 6))

print("\nS (real parts):")
for row in sm.S:
    print("  " + " ".join(f"{x.approx().real:8.4f}" for x in row))

print("\nkilling property:", all(killing_check(sm, mu) == 0 for mu in sm.labels if mu.size))

fus = fusion_from_S(sm)
box = Partition((1,))
print("\nfusion with (1):")
for lam in sm.labels:
    out = [str(nu) for nu in sm.labels if fus.N(lam, box, nu)]
    print(f"  {lam} x (1) = {' + '.join(out)}")

"""
Dimensions and twists of C^{1,2}
================================

Build the smallest interesting symplectic specialization, list its simple
objects, and compare the exact dimensions with their complex embeddings.
The diagrams just outside the label box have dimension zero: they are the
negligible objects killed by the quotient.
"""

from bcdcat import catdata as cd
from bcdcat.series import make_spec

spec = make_spec("C", 1, 2)
print(f"{spec}: l = {spec.l}, s = primitive {spec.M}-th root of unity")

# The simple objects.
for lam in spec.labels.gamma:
    d = cd.qdim_general(spec, lam)
    print(f"  {str(lam):6s} dim = {d}  ~ {d.approx():.6f}   twist = {cd.twist(spec, lam)}")

# The boundary: dimension zero, so these objects are negligible.
for lam in spec.labels.boundary():
    print(f"  {str(lam):6s} dim = {cd.qdim_general(spec, lam)}  (negligible)")

# Tensoring with the generating object (1) follows the branching rule.
for entry in cd.branching(spec, spec.labels.gamma[1]):
    print(f"  (1) -> {entry.mu}" + (" (negligible)" if entry.negligible else ""))

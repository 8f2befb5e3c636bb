"""
Spin and cohomological refinements
==================================

Split the Kirby colour by the parity of the diagrams.  For kn = 2 mod 4 the
even part has vanishing unknot values (spin refinement); for kn = 0 mod 4
the odd part does (cohomological refinement).
"""

from bcdcat.refine import graded_hopf_identity, refinement_verdict, unknot_eval
from bcdcat.series import make_spec

for n, k in [(1, 1), (1, 2), (2, 2), (1, 4), (2, 3)]:
    spec = make_spec("C", n, k)
    values = {(eps, nu): unknot_eval(spec, eps, nu) for eps in (1, -1) for nu in (0, 1)}
    zeros = [f"U_{eps:+d}(omega_{nu})" for (eps, nu), v in values.items() if v.is_zero()]
    print(f"C^{{{n},{k}}} kn = {n * k}: verdict {refinement_verdict(spec):13s} zeros: {', '.join(zeros) or '-'}")
    for nu in (0, 1):
        h = graded_hopf_identity(spec, nu)
        print(f"    graded Hopf, nu = {nu}: holds {h.holds}, unconditional k^n form holds {h.literal_holds}")

"""
Transparent objects and modularization
======================================

The orthogonal and mixed series carry transparent objects.  When all of
them have dimension 1 and twist 1 the category can be modularized: orbits
of the transparent group become the new simple objects, and fixed points
split.
"""

from bcdcat import catdata as cd
from bcdcat.modularize import modular_table
from bcdcat.series import make_spec

for series in ("C", "CB", "CBneg", "Bneg", "BD", "BDneg", "D"):
    spec = make_spec(series, 2, 2)
    v = cd.modularizability(spec)
    names = ", ".join(getattr(t, "name", str(t)) for t in v.transparent)
    print(f"{series:6s} transparent: {names:28s} -> {v.verdict}")

# A free action: every orbit has two elements.
table = modular_table(make_spec("CB", 2, 2))
print("\nCB^{2,2} modularized:", ", ".join(str(e.label) for e in table.labels))

# Fixed points split in two.
table = modular_table(make_spec("BD", 2, 2))
print("BD^{2,2} modularized:", ", ".join(str(e.label) for e in table.labels))

# For D the stabilizer-4 diagrams need a choice of m (1 or 4).
for m in (1, 4):
    table = modular_table(make_spec("D", 2, 3), default_m=m)
    print(f"D^{{2,3}} with m = {m}: {len(table.labels)} simple objects")
    for note in table.notes:
        print("   note:", note)

"""What goes wrong in dimension 48.

The shipped arrangement of G12 + G12 against the binary Golay code is the
best one found by ``scripts/search_t48_arrangement.py``.  This script reports
the support-condition violations it still has, the integrality of the glued
lattice at scale 2/9, and a short vector found by the randomized LLL probe.

    python3 demos/dim48_diagnostics.py
"""

from collections import Counter
from fractions import Fraction

from ternlat import catalog
from ternlat.enumeration import probe_short_vector
from ternlat.lattice import det_gram, gram, is_even_integral

s = Fraction(2, 9)
b = catalog.build("t48")
viol = b.info["condition_violations"]
print("violations by condition:", dict(Counter(c for c, _, _ in viol)))
print("distinct offending supports:", len({t for _, t, _ in viol}))

l = b.lattice
g = gram(l)
print("det at 2/9:", det_gram(l) * s ** 48)
print("(integral, even) at 2/9:", is_even_integral(l, s))
bad = sorted({(g[i][j] * s) for i in range(48) for j in range(48) if (g[i][j] * s).denominator != 1})
print("non-integral inner products at 2/9:", [str(x) for x in bad[:6]])

mid = b.info["intermediate"]
print("intermediate lattice (integral, even) at 2/9:", is_even_integral(mid, s),
      " det:", det_gram(mid) * s ** 48)

hit = probe_short_vector(g, 6 / s)
if hit:
    print(f"probe: vector of scaled norm {hit[0] * s} (claimed minimum 6)")
else:
    print("probe: nothing below scaled norm 6")

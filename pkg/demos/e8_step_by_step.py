"""E8 from a rank-4 lattice and an [8,2,6] ternary code, one step at a time.

    python3 demos/e8_step_by_step.py
"""

from fractions import Fraction

from ternlat import catalog, codes
from ternlat.construction import check_3z_condition, ternary_construction, ternary_volume_identity, triple
from ternlat.enumeration import Enumerator, theta_prefix
from ternlat.lattice import center_density_squared, det_gram, gram, is_unimodular, solution_lattice

# Base: integer vectors of length 8 killed by four pair-sum forms.
base = solution_lattice(8, catalog.E8_FORMS, name="L")
print(f"base lattice: rank {base.rank}, det {det_gram(base)}")
print("3Z^n meets L in 3L:", check_3z_condition(base))

code = catalog.load_code("c8_2_6")
print(f"code: [{code.n},{code.k},{codes.min_distance(code)}]")
print(codes.format_matrix(code.signed_rows()))

# E = {(x, y, z) in L^3 : x + y + z = 0} has rank 8; T(C) adds (v, v, -2v) for lifts v.
e = triple(base)
print(f"E(L): rank {e.rank} in R^{e.ambient_dim}")
t = ternary_construction(base, code, name="e8")
print("volume identity det T = det(L)^2 3^(5r-2k):", ternary_volume_identity(base, code, t))

g = gram(t)
en = Enumerator(g)
mn = en.min_norm()
print(f"minimum norm {mn}, kissing {en.histogram(mn)[mn]}")
print("center density squared:", center_density_squared(t, mn))
theta = theta_prefix(g, 6, Fraction(1, 18), enumerator=en)
print("theta at scale 1/18: 1 + " + " + ".join(f"{c}q^{n}" for n, c in theta))
for s in (Fraction(1, 9), Fraction(1, 18)):
    print(f"unimodular at scale {s}: {is_unimodular(t, s)}")

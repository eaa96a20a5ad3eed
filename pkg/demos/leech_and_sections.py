"""The Leech lattice as four translates of T(C) over D12, and its sections.

A section orthogonal to a minimal vector of the dual lattice drops the rank
by one; for the Leech lattice this gives the laminated lattice in dimension
23, and for T16 the one in dimension 15.

    python3 demos/leech_and_sections.py
"""

from fractions import Fraction

from ternlat import catalog
from ternlat.enumeration import Enumerator
from ternlat.lattice import center_density_squared, det_gram, gram, is_even_integral, is_unimodular


def summary(name):
    b = catalog.build(name)
    l = b.lattice
    s = l.scale_squared
    e = Enumerator(gram(l))
    mn = e.min_norm()
    det = det_gram(l)
    print(f"{name:10s} rank {l.rank:2d}  det at {s}: {det * s ** l.rank}  "
          f"min at {s}: {mn * s}  kissing {e.histogram(mn)[mn]}  "
          f"delta^2 {center_density_squared(l, mn, det)}")
    return b


prime = summary("t24_prime")
leech = summary("t24")
l = leech.lattice
print("Leech at 1/9: (integral, even) =", is_even_integral(l, Fraction(1, 9)),
      " unimodular =", is_unimodular(l, Fraction(1, 9)))

sec = summary("lambda23")
print("normal vector used for the section:", [str(x) for x in sec.info["normal"][:6]], "...")
summary("t16")
summary("lambda15")

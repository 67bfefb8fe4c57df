"""Duals, the transpose, torsion submodules, depth and grade.

The maximal ideal m = (x, y) of the cusp is the classical test module: it is
maximal Cohen-Macaulay, nonfree, and m (x) m* has a torsion submodule of
length two, which two independent algorithms must agree on.
"""

from hwprobe import (
    define_ring,
    depth,
    dual,
    grade,
    ideal_module,
    is_isomorphic,
    parse_polynomial,
    syzygy_module,
    tensor,
    tor_length,
    torsion_submodule,
    transpose,
)

cusp = define_ring(["x", "y"], [3, 2], 7, ["x^2 - y^3"], domain=True)
amb = cusp.ambient
m = ideal_module(cusp, [parse_polynomial(amb, "x"),
                        parse_polynomial(amb, "y")])

print("m = (x, y) over the cusp:")
print("  depth:", depth(m), " = ring dimension", cusp.dim,
      " (maximal Cohen-Macaulay)")
print("  grade:", grade(m), " rank:", m.rank())

md = dual(m)
print("  dual generators in degrees", md.twists)

prod = tensor(m, md)
t_sat, _ = torsion_submodule(prod, "saturation")
t_bid, _ = torsion_submodule(prod, "biduality")
print("torsion in m (x) m*:")
print("  by saturating 0 against the irrelevant ideal:", t_sat.length())
print("  as the kernel of the biduality map:        ", t_bid.length())

tr = transpose(m)
print("Auslander transpose:")
print("  Tor_1(m, Tr m) has length", tor_length(m, tr, 1),
      " (nonzero exactly because m is not free)")
o2 = syzygy_module(tr, 2, trim=True)
md_trim, _ = md.trim_free_summands()
print("  m* agrees with the second syzygy of Tr m:",
      is_isomorphic(md_trim, o2, allow_twist=True).verdict)

"""Weighted-graded rings, exact polynomial arithmetic, Groebner bases.

The cusp x^2 = y^3 is inhomogeneous for the standard grading but becomes
homogeneous once x carries weight 3 and y weight 2; all the homological
machinery downstream rests on that trick.
"""

from hwprobe import PolyRing, define_ring, groebner_basis, parse_polynomial

ring = PolyRing(["x", "y"], [3, 2], 7)
f = parse_polynomial(ring, "x^2 - y^3")
print("over", ring)
print("  f =", ring.format_poly(f))
print("  weighted degree of x^2:", ring.mono_deg((2, 0)))
print("  weighted degree of y^3:", ring.mono_deg((0, 3)))
print("  leading term (degree tie broken reverse-lex):",
      ring.leading_term(f))

print()
print("a Groebner basis computation over F_7[x,y,z]:")
r3 = PolyRing(["x", "y", "z"], [1, 1, 1], 7)
gens = [parse_polynomial(r3, s)
        for s in ("x^2 - y*z", "y^2 - x*z", "z^2 - x*y")]
vecs = [{(0, m): c for m, c in g.items()} for g in gens]
gb = groebner_basis(r3, vecs, (0,))
for v in gb.elements:
    print("   ", r3.format_poly({m: c for (_c, m), c in v.items()}))

print()
print("quotient-ring normal forms: R = F_101[x,y,z,w]/(xw - yz)")
quadric = define_ring(["x", "y", "z", "w"], [1, 1, 1, 1], 101,
                      ["x*w - y*z"], domain=True)
amb = quadric.ambient
g = parse_polynomial(amb, "y*z*w")
print("  nf(yzw) =", amb.format_poly(quadric.nf(g)),
      " (yz rewrites to xw under grevlex)")
print("  ring dimension:", quadric.dim,
      " hypersurface:", quadric.is_hypersurface)

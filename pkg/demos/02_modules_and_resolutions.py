"""Presented modules, minimal free resolutions, Betti numbers, Hilbert data.

Over the three-dimensional quadric R = F_101[x,y,z,w]/(xw - yz) the module
R/(x,z) resolves with Betti numbers 1, 2, 2, 2, ...: after one step the
resolution becomes two-periodic, the hallmark of hypersurface rings.
"""

from hwprobe import (
    betti_numbers,
    complexity_estimate,
    define_ring,
    minimal_free_resolution,
    parse_polynomial,
    quotient_module,
    residue_field_module,
    syzygy_module,
)

ring = define_ring(["x", "y", "z", "w"], [1, 1, 1, 1], 101,
                   ["x*w - y*z"], domain=True)
amb = ring.ambient
m = quotient_module(ring, [parse_polynomial(amb, "x"),
                           parse_polynomial(amb, "z")])

res = minimal_free_resolution(m, 7)
print("resolution of R/(x,z) over the quadric threefold:")
print("  Betti numbers b_0..b_6:", res.betti_numbers(6))
print("  differentials compose to zero:", res.verify(6))
print("  every entry has positive degree (minimality):", res.is_minimal())
print("  classification:", complexity_estimate(m, 6)["classification"])

print()
print("first syzygy module (image of the second differential):")
o1 = syzygy_module(m, 1)
print("  generators in degrees", o1.twists)
print("  Hilbert function in degrees 0..6:", o1.hilbert_function(0, 6))

print()
print("the residue field of the cusp F_7[x,y]/(x^2 - y^3):")
cusp = define_ring(["x", "y"], [3, 2], 7, ["x^2 - y^3"], domain=True)
k = residue_field_module(cusp)
print("  Betti numbers:", betti_numbers(k, 6), " (bounded: complexity one)")
print("  length of k:", k.length())

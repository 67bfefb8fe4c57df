"""Matrix factorizations and Tate (co)homology at every integer index.

An MCM module without free summands over a hypersurface S/(f) is the
cokernel of a pair (A, B) with AB = BA = f*I; gluing A and B into a doubly
infinite complex gives a period-two complete resolution whose homology
against any module is Tate homology, defined for negative indices too.
"""

from hwprobe import (
    complete_resolution,
    define_ring,
    dual,
    free_module,
    ideal_module,
    matrix_factorization_of,
    parse_polynomial,
    syzygy_module,
    tate_ext_length,
    tate_tor_length,
    tor_length,
)

cusp = define_ring(["x", "y"], [3, 2], 7, ["x^2 - y^3"], domain=True)
amb = cusp.ambient
m = ideal_module(cusp, [parse_polynomial(amb, "x"),
                        parse_polynomial(amb, "y")])

mf = matrix_factorization_of(m)
print("matrix factorization of x^2 - y^3 presenting m = (x, y):")
for name, cols in (("A", mf.a_cols), ("B", mf.b_cols)):
    rows = []
    for j in range(mf.size):
        rows.append([amb.format_poly({mm: c for (k, mm), c in col.items()
                                      if k == j}) or "0" for col in cols])
    print(f"  {name} = {rows}")

cr = complete_resolution(m, 2, window=5)
print("complete resolution: period", cr.q, " twist per period", cr.shift,
      " totally acyclic on the window:", cr.verify(5))

md = dual(m)
print()
print("Tate homology against m* at indices -4..4:",
      [tate_tor_length(cr, md, i) for i in range(-4, 5)])
print("ordinary Tor matches in positive degrees:",
      [tor_length(m, md, i) for i in range(1, 5)])

o1 = syzygy_module(m, 1, trim=True)
cr1 = complete_resolution(o1, 2, window=4)
print("shift law (syzygies translate the index):",
      all(tate_tor_length(cr, md, i + 1) == tate_tor_length(cr1, md, i)
          for i in range(-3, 4)))
crd = complete_resolution(md, 2, window=4)
print("duality law (Tate Tor against Tate Ext of the dual):",
      all(tate_tor_length(cr, md, i) == tate_ext_length(crd, md, -i - 1)
          for i in range(-3, 4)))
print("against the free module everything vanishes:",
      all(tate_tor_length(cr, free_module(cusp, (0,)), i) == 0
          for i in range(-3, 4)))

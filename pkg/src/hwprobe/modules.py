"""Finitely presented graded modules over quotient rings.

A :class:`PresentedModule` is a graded free module (a tuple of generator
degrees) together with a homogeneous relation matrix stored column-wise;
the module is the cokernel.  Construction normalizes: relations are reduced
mod I, degree-zero unit entries are cancelled, and the relation columns are
cut down to a minimal generating set, so stored presentations are minimal.

Homogeneous maps between presented modules are :class:`GradedMap`; kernels,
cokernels and subquotients reduce to syzygy computations over the ambient
polynomial ring.
"""

from . import hilbert as hb
from .freemod import (
    vec_component,
    vec_degree,
)
from .groebner import (
    InhomogeneousError,
    kernel_into_quotient,
    minimal_generators,
    minimalize_presentation,
    module_groebner,
    poly_det,
    vec_nf_ideal,
)


class HypothesisError(ValueError):
    """A mathematical precondition of the operation is violated."""


class PresentedModule:
    """M = coker(P) for a homogeneous matrix P over a quotient ring."""

    def __init__(self, ring, twists, rel_cols, *, normalize=True):
        self.ring = ring
        twists = tuple(int(t) for t in twists)
        cols = [vec_nf_ideal(ring, c) for c in rel_cols]
        cols = [c for c in cols if c]
        for c in cols:
            if vec_degree(ring.ambient, c, twists) is None:
                raise InhomogeneousError("relation columns must be homogeneous")
            if any(comp >= len(twists) for comp, _ in c):
                raise ValueError("relation component exceeds generator count")
        if normalize:
            cols, twists, _ = minimalize_presentation(ring, cols, twists)
            cols = minimal_generators(ring, cols, twists)
        self.twists = tuple(twists)
        self.rels = tuple(cols)
        self._cache = {}

    # -- basics --------------------------------------------------------------

    @property
    def ngens(self):
        return len(self.twists)

    def rel_degrees(self):
        amb = self.ring.ambient
        return tuple(vec_degree(amb, c, self.twists) for c in self.rels)

    def is_zero(self):
        return self.ngens == 0

    def is_free(self):
        return not self.rels

    def __repr__(self):
        return (f"PresentedModule({self.ring!r}, gens={list(self.twists)}, "
                f"rels={len(self.rels)})")

    def rel_gb(self):
        """Groebner basis of <relations> + I*F, for membership over R."""
        gb = self._cache.get("rel_gb")
        if gb is None:
            gb = module_groebner(self.ring, self.rels, self.twists)
            self._cache["rel_gb"] = gb
        return gb

    def element_nf(self, v):
        """Canonical representative of a coset of the relation submodule."""
        return self.rel_gb().normal_form(v)

    def element_is_zero(self, v):
        return not self.element_nf(v)

    # -- Hilbert data ----------------------------------------------------------

    def hilbert_numerator(self):
        num = self._cache.get("hnum")
        if num is None:
            init = self.rel_gb().initial_module()
            num = hb.module_numerator(self.ring.ambient, self.twists, init)
            self._cache["hnum"] = num
        return num

    def hilbert_function(self, lo, hi):
        """Graded dimensions dim_k M_d for d in lo..hi."""
        return hb.series_coefficients(self.ring.ambient,
                                      self.hilbert_numerator(), lo, hi)

    def length(self):
        """Total k-dimension, or None when the module has positive dimension."""
        return hb.series_total_if_finite(self.ring.ambient,
                                         self.hilbert_numerator())

    def krull_dim(self):
        """Dimension of the support, read off the initial module; -1 for 0."""
        d = self._cache.get("dim")
        if d is None:
            init = self.rel_gb().initial_module()
            amb = self.ring.ambient
            d = -1
            for j in range(self.ngens):
                d = max(d, hb.monomial_quotient_dim(amb.nvars, init.get(j, ())))
            self._cache["dim"] = d
        return d

    def min_gen_degrees(self):
        return tuple(sorted(self.twists))

    # -- constructions ---------------------------------------------------------

    def twist(self, s):
        """M(s): degrees shift down by s; generator degrees become a_j - s."""
        out = PresentedModule(self.ring, tuple(a - s for a in self.twists),
                              self.rels, normalize=False)
        return out

    def direct_sum(self, other):
        if other.ring != self.ring:
            raise HypothesisError("direct sum over different rings")
        g = self.ngens
        cols = list(self.rels)
        for c in other.rels:
            cols.append({(j + g, m): coef for (j, m), coef in c.items()})
        return PresentedModule(self.ring, self.twists + other.twists, cols,
                               normalize=False)

    def trim_free_summands(self):
        """Split off generators untouched by every relation.

        Returns ``(trimmed, free_twists)``: zero rows of the minimal relation
        matrix are split off as free summands.
        """
        used = set()
        for c in self.rels:
            for (j, _m) in c:
                used.add(j)
        keep = [j for j in range(self.ngens) if j in used]
        free = [self.twists[j] for j in range(self.ngens) if j not in used]
        index = {j: i for i, j in enumerate(keep)}
        cols = [{(index[j], m): coef for (j, m), coef in c.items()}
                for c in self.rels]
        trimmed = PresentedModule(self.ring, tuple(self.twists[j] for j in keep),
                                  cols, normalize=False)
        return trimmed, tuple(free)

    # -- rank and Fitting loci ---------------------------------------------------

    def rank(self):
        """Generic rank over the fraction field of an asserted domain."""
        if not self.ring.domain:
            raise HypothesisError("rank needs the ring asserted to be a domain")
        g = self.ngens
        if g == 0:
            return 0
        r = self._matrix_rank_mod_ideal()
        return g - r

    def _entry(self, row, col):
        return vec_component(self.rels[col], row)

    def _matrix_rank_mod_ideal(self):
        """Largest r with a nonzero r x r minor of the presentation mod I."""
        amb = self.ring.ambient
        nc = len(self.rels)
        g = self.ngens
        level = {((), ())}
        r = 0
        while r < min(g, nc):
            nxt = set()
            for rows, cols in level:
                for i in range(g):
                    if i in rows:
                        continue
                    for j in range(nc):
                        if j in cols:
                            continue
                        key = (tuple(sorted(rows + (i,))), tuple(sorted(cols + (j,))))
                        nxt.add(key)
            good = set()
            for rows, cols in sorted(nxt):
                det = poly_det(amb, self._entry, rows, cols)
                if not self.ring.is_zero(det):
                    good.add((rows, cols))
            if not good:
                return r
            level = good
            r += 1
        return r

    def fitting_minors(self, size):
        """Nonzero (mod I) size x size minors of the presentation matrix."""
        from itertools import combinations
        amb = self.ring.ambient
        if size == 0:
            return [amb.one()]
        out = []
        for rows in combinations(range(self.ngens), size):
            for cols in combinations(range(len(self.rels)), size):
                det = self.ring.nf(poly_det(amb, self._entry, rows, cols))
                if det:
                    out.append(det)
        return out

    def nonfree_locus_dim(self):
        """Dimension of the locus where the module can fail local finite pd.

        Computes ``dim V(Fitt_rank(M) + I + Jac)`` where Jac is the ideal of
        codimension-size minors of the Jacobian of the ideal generators (the
        Jacobian criterion cuts out the singular locus over a perfect field).
        A value <= 0 certifies finite projective dimension locally on the
        punctured spectrum; the empty locus reports -1.
        """
        from itertools import combinations
        from .groebner import groebner_basis
        rq = self.ring
        amb = rq.ambient
        r = self.rank()
        size = self.ngens - r
        gens = list(rq.ideal_gens) + self.fitting_minors(size)
        c = amb.nvars - rq.dim
        if c == 0:
            return -1
        jac = [[_formal_partial(amb, g, i) for i in range(amb.nvars)]
               for g in rq.ideal_gens]
        if len(rq.ideal_gens) < c:
            raise HypothesisError("ideal has fewer generators than its codimension")
        for rows in combinations(range(len(rq.ideal_gens)), c):
            for cols in combinations(range(amb.nvars), c):
                det = rq.nf(poly_det(amb, lambda a, b: jac[rows[a]][cols[b]],
                                     range(c), range(c)))
                if det:
                    gens.append(det)
        gens = [g for g in gens if g]
        if not gens:
            return rq.dim
        vecs = [{(0, m): cc for m, cc in g.items()} for g in gens]
        gb = groebner_basis(amb, vecs, (0,))
        init = [m for (_c, m) in gb.leading_terms()]
        return hb.monomial_quotient_dim(amb.nvars, init)


def _formal_partial(ring, f, i):
    p = ring.p
    out = {}
    for m, c in f.items():
        e = m[i]
        if e == 0:
            continue
        cc = c * e % p
        if not cc:
            continue
        mm = list(m)
        mm[i] -= 1
        out[tuple(mm)] = cc
    return out


# ---------------------------------------------------------------------------
# constructors


def make_module(ring, twists, rel_cols, *, normalize=True):
    return PresentedModule(ring, twists, rel_cols, normalize=normalize)


def free_module(ring, twists):
    return PresentedModule(ring, twists, (), normalize=False)


def quotient_module(ring, ideal_gens):
    """R/J as a module: one generator, relations the ideal generators."""
    cols = [{(0, m): c for m, c in ring.nf(g).items()} for g in ideal_gens]
    return PresentedModule(ring, (0,), [c for c in cols if c])


def ideal_module(ring, gens):
    """An ideal (g_1, ..., g_k) of R as the module generated by the g_i."""
    amb = ring.ambient
    gens = [ring.nf(g) for g in gens]
    gens = [g for g in gens if g]
    if not gens:
        return PresentedModule(ring, (), ())
    degs = []
    for g in gens:
        d = amb.homogeneous_degree(g)
        if d is None:
            raise InhomogeneousError("ideal generators must be homogeneous")
        degs.append(d)
    cols = [{(0, m): c for m, c in g.items()} for g in gens]
    rels = kernel_into_quotient(ring, cols, [], (0,))
    return PresentedModule(ring, tuple(degs), rels)


def residue_field_module(ring):
    """k = R/m as a module over R."""
    return quotient_module(ring, ring.variables())


def subquotient(ring, free_twists, z_gens, b_gens):
    """(<Z> + <B>)/<B> inside the free module, as a presented module.

    Returns ``(module, kept)`` where kept are the representative vectors of
    the module's generators inside the free module.
    """
    amb = ring.ambient
    gbB = module_groebner(ring, b_gens, free_twists)
    kept = minimal_generators(ring, z_gens, free_twists, modulo=gbB)
    if not kept:
        return PresentedModule(ring, (), ()), []
    twists = tuple(vec_degree(amb, v, free_twists) for v in kept)
    rels = kernel_into_quotient(ring, kept, list(b_gens), free_twists)
    mod = PresentedModule(ring, twists, rels)
    if mod.ngens != len(kept):
        raise AssertionError("subquotient generators were not minimal")
    return mod, kept


def subquotient_is_zero(ring, free_twists, z_gens, b_gens):
    gbB = module_groebner(ring, b_gens, free_twists)
    return all(not gbB.normal_form(z) for z in z_gens)


def submodule_numerator(ring, free_twists, cols):
    """Hilbert numerator of F/(<cols> + I*F)."""
    gb = module_groebner(ring, cols, free_twists)
    init = gb.initial_module()
    return hb.module_numerator(ring.ambient, free_twists, init)


def homology_length(ring, free_twists, z_gens, b_gens):
    """Length of (<Z>+<B>)/<B>, or None when infinite."""
    amb = ring.ambient
    n_b = submodule_numerator(ring, free_twists, list(b_gens))
    n_zb = submodule_numerator(ring, free_twists, list(z_gens) + list(b_gens))
    return hb.series_total_if_finite(amb, hb.tpoly_sub(n_b, n_zb))


# ---------------------------------------------------------------------------
# graded maps


class GradedMap:
    """A homogeneous map of presented modules, given on generators.

    ``cols[j]`` is the image of the j-th generator of the source, written in
    the target's generator coordinates; all columns are homogeneous and the
    map has a single degree ``shift`` (zero for honest degree-preserving
    maps): deg(cols[j]) = source.twists[j] + shift.
    """

    def __init__(self, source, target, cols, shift=0):
        if source.ring != target.ring:
            raise HypothesisError("map between modules over different rings")
        self.source = source
        self.target = target
        self.ring = source.ring
        self.cols = tuple(vec_nf_ideal(source.ring, c) for c in cols)
        self.shift = shift
        if len(self.cols) != source.ngens:
            raise ValueError("one column per source generator required")

    def check(self) -> bool:
        """Columns homogeneous of the right degree; relations preserved."""
        amb = self.ring.ambient
        for j, c in enumerate(self.cols):
            d = vec_degree(amb, c, self.target.twists)
            if d is None or (c and d != self.source.twists[j] + self.shift):
                return False
        gb = self.target.rel_gb()
        p = amb.p
        for rel in self.source.rels:
            img = {}
            for (j, m), coef in rel.items():
                for (k, mm), cc in self.cols[j].items():
                    t = (k, tuple(a + b for a, b in zip(m, mm)))
                    v = (img.get(t, 0) + coef * cc) % p
                    if v:
                        img[t] = v
                    else:
                        del img[t]
            if gb.normal_form(img):
                return False
        return True

    def apply(self, v):
        """Image of an element given in source generator coordinates."""
        amb = self.ring.ambient
        p = amb.p
        out = {}
        for (j, m), coef in v.items():
            for (k, mm), cc in self.cols[j].items():
                t = (k, tuple(a + b for a, b in zip(m, mm)))
                val = (out.get(t, 0) + coef * cc) % p
                if val:
                    out[t] = val
                else:
                    del out[t]
        return out

    def compose(self, inner):
        """self o inner."""
        cols = [self.apply(c) for c in inner.cols]
        return GradedMap(inner.source, self.target, cols,
                         shift=self.shift + inner.shift)

    def is_zero(self) -> bool:
        gb = self.target.rel_gb()
        return all(not gb.normal_form(c) for c in self.cols)

    def kernel(self):
        """Returns ``(K, iota)`` with iota: K -> source the inclusion."""
        z = kernel_into_quotient(self.ring, list(self.cols),
                                 list(self.target.rels), self.target.twists)
        k, kept = subquotient(self.ring, self.source.twists, z,
                              list(self.source.rels))
        return k, GradedMap(k, self.source, kept)

    def is_injective(self) -> bool:
        z = kernel_into_quotient(self.ring, list(self.cols),
                                 list(self.target.rels), self.target.twists)
        return subquotient_is_zero(self.ring, self.source.twists, z,
                                   list(self.source.rels))

    def cokernel(self):
        return PresentedModule(self.ring, self.target.twists,
                               list(self.target.rels) + list(self.cols))

    def is_surjective(self) -> bool:
        return self.cokernel().is_zero()

    def is_isomorphism(self) -> bool:
        return self.is_surjective() and self.is_injective()


def identity_map(m):
    from .freemod import unit_vector
    return GradedMap(m, m, [unit_vector(m.ring.ambient, j) for j in range(m.ngens)])


# ---------------------------------------------------------------------------
# tensor products


def tensor(m, n):
    """M (x) N, presented on generator pairs by [P_M (x) 1 | 1 (x) P_N]."""
    if m.ring != n.ring:
        raise HypothesisError("tensor over different rings")
    gm, gn = m.ngens, n.ngens
    twists = tuple(a + b for a in m.twists for b in n.twists)
    cols = []
    for rel in m.rels:
        for k in range(gn):
            cols.append({(j * gn + k, mm): c for (j, mm), c in rel.items()})
    for rel in n.rels:
        for j in range(gm):
            cols.append({(j * gn + k, mm): c for (k, mm), c in rel.items()})
    return PresentedModule(m.ring, twists, cols)

"""Derived functors and the rest of the homological toolkit.

Tor is the homology of (resolution of M) (x) N, Ext the cohomology of
Hom(resolution, N); both land in subquotients of free modules over R that
the syzygy engine presents.  Depth comes from Koszul homology on all ambient
variables, grade from the first nonvanishing Ext against the ring, torsion
from saturation (dimension one) or from the kernel of the biduality map.
"""

from itertools import combinations

from .freemod import unit_vector, vec_component, vec_degree
from .groebner import express_in_terms, kernel_into_quotient, saturate
from .modules import (
    GradedMap,
    HypothesisError,
    PresentedModule,
    free_module,
    homology_length,
    subquotient,
    subquotient_is_zero,
    tensor,
)
from .resolution import resolution_of

# ---------------------------------------------------------------------------
# block matrices for (-) (x) N and Hom(-, N) on free complexes


def _tensor_block_cols(d_cols, g_n):
    """Columns of d (x) 1_N; source component (c, k) flattens to c*g_n + k."""
    out = []
    for col in d_cols:
        for k in range(g_n):
            out.append({(j * g_n + k, m): coef for (j, m), coef in col.items()})
    return out


def _free_tensor_rels(n_comps, n_module):
    g_n = n_module.ngens
    out = []
    for c in range(n_comps):
        for rel in n_module.rels:
            out.append({(c * g_n + k, m): coef for (k, m), coef in rel.items()})
    return out


def _tensor_twists(f_twists, n_module):
    return tuple(t + b for t in f_twists for b in n_module.twists)


def _hom_block_cols(d_cols, n_src_comps, g_n):
    """Columns of Hom(d, N): precomposition with d, acting on blocks."""
    out = []
    for c in range(n_src_comps):
        for k in range(g_n):
            col = {}
            for cp, dcol in enumerate(d_cols):
                for (j, m), coef in dcol.items():
                    if j == c:
                        col[(cp * g_n + k, m)] = coef
            out.append(col)
    return out


def _hom_twists(f_twists, n_module):
    return tuple(b - t for t in f_twists for b in n_module.twists)


# ---------------------------------------------------------------------------
# Tor


def tor(m, n, i):
    """Tor_i(M, N) as a presented module; Tor_0 is the tensor product."""
    if i < 0:
        raise ValueError("Tor is indexed by nonnegative integers")
    if i == 0:
        return tensor(m, n)
    z, b, twists = _tor_cycle_data(m, n, i)
    if z is None:
        return PresentedModule(m.ring, (), ())
    mod, _ = subquotient(m.ring, twists, z, b)
    return mod


def tor_length(m, n, i):
    """Length of Tor_i(M, N); None when it has positive dimension."""
    if i == 0:
        return tensor(m, n).length()
    z, b, twists = _tor_cycle_data(m, n, i)
    if z is None:
        return 0
    return homology_length(m.ring, twists, z, b)


def tor_is_zero(m, n, i):
    if i == 0:
        return tensor(m, n).is_zero()
    z, b, twists = _tor_cycle_data(m, n, i)
    if z is None:
        return True
    return subquotient_is_zero(m.ring, twists, z, b)


def _tor_cycle_data(m, n, i):
    if m.ring != n.ring:
        raise HypothesisError("Tor over different rings")
    res = resolution_of(m, i + 1)
    if res.betti(i) == 0 or n.is_zero():
        return None, None, None
    g_n = n.ngens
    f_i = res.twists_of_level(i)
    f_im1 = res.twists_of_level(i - 1)
    d_i = res.differential(i)
    d_ip1 = res.differential(i + 1)
    src = _tensor_twists(f_i, n)
    tgt_rels = _free_tensor_rels(len(f_im1), n)
    z = kernel_into_quotient(m.ring, _tensor_block_cols(d_i, g_n), tgt_rels,
                             _tensor_twists(f_im1, n))
    b = _tensor_block_cols(d_ip1, g_n) + _free_tensor_rels(len(f_i), n)
    return z, b, src


# ---------------------------------------------------------------------------
# Hom and Ext


class HomData:
    """Hom(M, N) with its generators realized as maps M -> N."""

    def __init__(self, module, gen_maps, free_twists, kept, b_gens):
        self.module = module
        self.gen_maps = gen_maps
        self.free_twists = free_twists
        self.kept = kept
        self.b_gens = b_gens


def hom_data(m, n) -> HomData:
    ring = m.ring
    if m.ring != n.ring:
        raise HypothesisError("Hom over different rings")
    g_n = n.ngens
    if m.ngens == 0 or g_n == 0:
        return HomData(PresentedModule(ring, (), ()), [], (), [], [])
    free_twists = _hom_twists(m.twists, n)
    d_out = _hom_block_cols(list(m.rels), m.ngens, g_n)
    tgt_twists = tuple(b - e for e in m.rel_degrees() for b in n.twists)
    tgt_rels = _free_tensor_rels(len(m.rels), n)
    z = kernel_into_quotient(ring, d_out, tgt_rels, tgt_twists)
    b = _free_tensor_rels(m.ngens, n)
    mod, kept = subquotient(ring, free_twists, z, b)
    amb = ring.ambient
    maps = []
    for v in kept:
        shift = vec_degree(amb, v, free_twists)
        cols = []
        for j in range(m.ngens):
            col = {}
            for (c, mm), coef in v.items():
                if c // g_n == j:
                    col[(c % g_n, mm)] = coef
            cols.append(col)
        maps.append(GradedMap(m, n, cols, shift=shift))
    return HomData(mod, maps, free_twists, kept, b)


def hom(m, n):
    """Hom_R(M, N) as a presented module."""
    return hom_data(m, n).module


def dual(m):
    """M* = Hom(M, R)."""
    return hom(m, free_module(m.ring, (0,)))


def ext(m, n, i):
    """Ext^i(M, N) as a presented module; Ext^0 is Hom."""
    if i < 0:
        raise ValueError("Ext is indexed by nonnegative integers")
    if i == 0:
        return hom(m, n)
    z, b, twists = _ext_cycle_data(m, n, i)
    if z is None:
        return PresentedModule(m.ring, (), ())
    mod, _ = subquotient(m.ring, twists, z, b)
    return mod


def ext_is_zero(m, n, i):
    if i == 0:
        return hom(m, n).is_zero()
    z, b, twists = _ext_cycle_data(m, n, i)
    if z is None:
        return True
    return subquotient_is_zero(m.ring, twists, z, b)


def ext_length(m, n, i):
    if i == 0:
        return hom(m, n).length()
    z, b, twists = _ext_cycle_data(m, n, i)
    if z is None:
        return 0
    return homology_length(m.ring, twists, z, b)


def _ext_cycle_data(m, n, i):
    if m.ring != n.ring:
        raise HypothesisError("Ext over different rings")
    res = resolution_of(m, i + 1)
    if res.betti(i) == 0 or n.is_zero():
        return None, None, None
    g_n = n.ngens
    f_i = res.twists_of_level(i)
    f_ip1 = res.twists_of_level(i + 1)
    d_ip1 = res.differential(i + 1)
    d_i = res.differential(i)
    src = _hom_twists(f_i, n)
    d_out = _hom_block_cols(d_ip1, len(f_i), g_n)
    z = kernel_into_quotient(m.ring, d_out, _free_tensor_rels(len(f_ip1), n),
                             _hom_twists(f_ip1, n))
    b = _hom_block_cols(d_i, len(res.twists_of_level(i - 1)), g_n)
    # the incoming differential's source is C^{i-1}: its columns are indexed
    # by F_{i-1} x N components, each a vector in C^i coordinates
    b = b + _free_tensor_rels(len(f_i), n)
    return z, b, src


# ---------------------------------------------------------------------------
# transpose


def transpose(m):
    """Auslander transpose: cokernel of the dual of the minimal presentation."""
    amb = m.ring.ambient
    g = m.ngens
    rel_degs = m.rel_degrees()
    twists = tuple(-e for e in rel_degs)
    cols = []
    for j in range(g):
        col = {}
        for c, rel in enumerate(m.rels):
            f = vec_component(rel, j)
            for mm, coef in f.items():
                col[(c, mm)] = coef
        cols.append(col)
    return PresentedModule(m.ring, twists, cols)


# ---------------------------------------------------------------------------
# Koszul depth


def koszul_differential(ring_q, j):
    """Columns of K_j -> K_{j-1} for the Koszul complex on all variables."""
    amb = ring_q.ambient
    n = amb.nvars
    p = amb.p
    prev = list(combinations(range(n), j - 1))
    idx = {s: i for i, s in enumerate(prev)}
    cols = []
    for s in combinations(range(n), j):
        col = {}
        for pos, v in enumerate(s):
            rest = s[:pos] + s[pos + 1:]
            mono = [0] * n
            mono[v] = 1
            col[(idx[rest], tuple(mono))] = 1 if pos % 2 == 0 else p - 1
        cols.append(col)
    return cols


def koszul_twists(ring_q, j):
    w = ring_q.ambient.weights
    return tuple(sum(w[i] for i in s)
                 for s in combinations(range(ring_q.ambient.nvars), j))


def _koszul_homology_is_zero(m, i):
    ring = m.ring
    n = ring.ambient.nvars
    g = m.ngens
    src = _tensor_twists(koszul_twists(ring, i), m)
    tgt_twists = _tensor_twists(koszul_twists(ring, i - 1), m)
    d_i = _tensor_block_cols(koszul_differential(ring, i), g)
    tgt_rels = _free_tensor_rels(len(koszul_twists(ring, i - 1)), m)
    z = kernel_into_quotient(ring, d_i, tgt_rels, tgt_twists)
    b = _free_tensor_rels(len(koszul_twists(ring, i)), m)
    if i < n:
        b = _tensor_block_cols(koszul_differential(ring, i + 1), g) + b
    return subquotient_is_zero(ring, src, z, b)


def depth(m):
    """Depth over the irrelevant maximal ideal via Koszul homology.

    depth M = n - max{i : H_i(K(x_1..x_n) (x) M) != 0} for the Koszul complex
    on all ambient variables; this agrees with depth over R.
    """
    if m.is_zero():
        raise HypothesisError("depth of the zero module is undefined")
    n = m.ring.ambient.nvars
    for i in range(n, 0, -1):
        if not _koszul_homology_is_zero(m, i):
            return n - i
    return n


def grade(m):
    """Least i with Ext^i(M, R) nonzero."""
    if m.is_zero():
        raise HypothesisError("grade of the zero module is undefined")
    r_free = free_module(m.ring, (0,))
    bound = max(m.ring.dim, m.ring.ambient.nvars)
    for i in range(bound + 1):
        if not ext_is_zero(m, r_free, i):
            return i
    raise ArithmeticError("no nonvanishing Ext against R found; "
                          "grade exceeds the ambient bound")


# ---------------------------------------------------------------------------
# torsion and biduality


def biduality_map(m) -> GradedMap:
    """The natural map M -> M**."""
    ring = m.ring
    r1 = free_module(ring, (0,))
    hd1 = hom_data(m, r1)
    hd2 = hom_data(hd1.module, r1)
    if m.ngens == 0:
        return GradedMap(m, hd2.module, [])
    cols = []
    for j in range(m.ngens):
        ev = {}
        for ell, phi in enumerate(hd1.gen_maps):
            f = vec_component(phi.cols[j], 0)
            for mm, c in f.items():
                ev[(ell, mm)] = c
        if not hd1.gen_maps:
            cols.append({})
            continue
        if not ev:
            cols.append({})
            continue
        coords = express_in_terms(ring, ev, hd2.kept, hd2.b_gens,
                                  hd2.free_twists)
        if coords is None:
            raise ArithmeticError("biduality image failed to land in Hom(M*, R)")
        col = {}
        for ell, f in enumerate(coords):
            for mm, c in f.items():
                col[(ell, mm)] = c
        cols.append(col)
    return GradedMap(m, hd2.module, cols)


def torsion_submodule(m, method="auto"):
    """The torsion submodule with its embedding into M.

    Over a one-dimensional ring this is 0 :_M m^infinity computed by
    saturation; in general (over an asserted domain) it is the kernel of the
    biduality map.  Returns ``(T, iota)``.
    """
    ring = m.ring
    if not ring.domain:
        raise HypothesisError("torsion needs the ring asserted to be a domain")
    if m.is_zero():
        z = PresentedModule(ring, (), ())
        return z, GradedMap(z, m, [])
    if method == "auto":
        method = "saturation" if ring.dim == 1 else "biduality"
    if method == "saturation":
        if ring.dim != 1:
            raise HypothesisError("saturation torsion is the dimension-one path")
        sat_cols, _ = saturate(ring, list(m.rels), m.twists, ring.variables())
        t, kept = subquotient(ring, m.twists, sat_cols, list(m.rels))
        return t, GradedMap(t, m, kept)
    if method == "biduality":
        eta = biduality_map(m)
        return eta.kernel()
    raise ValueError(f"unknown torsion method {method!r}")


def torsion_length(m, method="auto"):
    t, _ = torsion_submodule(m, method)
    ln = t.length()
    if ln is None:
        raise ArithmeticError("torsion submodule has positive dimension; "
                              "the ring is likely not a domain as asserted")
    return ln


def direct_sum_map(maps):
    """Block-diagonal map on direct sums (helper for additivity tests)."""
    if not maps:
        raise ValueError("empty direct sum")
    src = maps[0].source
    tgt = maps[0].target
    for f in maps[1:]:
        src = src.direct_sum(f.source)
        tgt = tgt.direct_sum(f.target)
    cols = []
    off_t = 0
    off_s = 0
    out_cols = []
    for f in maps:
        for col in f.cols:
            out_cols.append({(k + off_t, mm): c for (k, mm), c in col.items()})
        off_t += f.target.ngens
        off_s += f.source.ngens
    return GradedMap(src, tgt, out_cols)

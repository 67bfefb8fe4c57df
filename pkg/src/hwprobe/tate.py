"""Matrix factorizations, periodic complete resolutions, Tate (co)homology.

Over a hypersurface R = S/(f), a maximal Cohen-Macaulay module without free
summands is the cokernel of a matrix factorization (A, B) with
AB = BA = f*I exactly over S; the doubly infinite complex alternating A and
B is totally acyclic and serves as the period-2 complete resolution.  Other
even periods are detected from the minimal resolution: an isomorphism
between distant syzygies, certified by an invertible change of basis, closes
the resolution into a cycle.  Total acyclicity of the cycle and of its dual
is always verified on a window.
"""

from .freemod import compose_cols, transpose_cols, unit_vector, vec_degree
from .groebner import (
    express_in_terms,
    invert_graded_matrix,
    kernel_into_quotient,
    vec_nf_ideal,
)
from .homalg import (
    _free_tensor_rels,
    _hom_block_cols,
    _hom_twists,
    _tensor_block_cols,
    _tensor_twists,
    depth,
)
from .isomorphism import ISO, is_isomorphic
from .modules import (
    HypothesisError,
    PresentedModule,
    homology_length,
    subquotient,
    subquotient_is_zero,
)
from .quotient import QuotientRing
from .resolution import resolution_of, syzygy_module


def _trivial_quotient(amb):
    rq = amb.__dict__.get("_trivial_quotient")
    if rq is None:
        rq = QuotientRing(amb, [])
        amb.__dict__["_trivial_quotient"] = rq
    return rq


class MatrixFactorization:
    """A pair (A, B) of square matrices over S with AB = BA = f * I."""

    def __init__(self, ring, a_cols, a_row_twists, b_cols, verify=True):
        if not ring.is_hypersurface:
            raise HypothesisError("matrix factorizations need a hypersurface ring")
        self.ring = ring
        self.f = ring.hypersurface_poly
        amb = ring.ambient
        self.fdeg = amb.homogeneous_degree(self.f)
        self.a_cols = tuple(a_cols)
        self.b_cols = tuple(b_cols)
        self.row_twists = tuple(a_row_twists)
        self.size = len(self.row_twists)
        if len(self.a_cols) != self.size or len(self.b_cols) != self.size:
            raise ValueError("matrix factorization matrices must be square")
        self.col_twists = tuple(vec_degree(amb, c, self.row_twists)
                                for c in self.a_cols)
        if verify:
            self._verify()

    def _verify(self):
        amb = self.ring.ambient
        f = self.f
        for name, prod, ncomp in (("AB", compose_cols(amb, self.a_cols, self.b_cols), self.size),
                                  ("BA", compose_cols(amb, self.b_cols, self.a_cols), self.size)):
            for j, col in enumerate(prod):
                want = {(j, m): c for m, c in f.items()}
                if col != want:
                    raise ArithmeticError(f"{name} != f*I in column {j}")

    def module(self):
        return PresentedModule(self.ring, self.row_twists, self.a_cols,
                               normalize=False)


def matrix_factorization_of(module: PresentedModule) -> MatrixFactorization:
    """The reduced matrix factorization presenting an MCM module.

    The minimal presentation lifts to S as A; the second matrix B is found by
    expressing f*e_j in the columns of A over S (exact division tracking).
    """
    ring = module.ring
    if not ring.is_hypersurface:
        raise HypothesisError("matrix factorizations need a hypersurface ring")
    if module.is_zero():
        raise HypothesisError("zero module has no reduced matrix factorization")
    trimmed, free = module.trim_free_summands()
    if free:
        raise HypothesisError("module has free summands; trim them first")
    if depth(module) != ring.dim:
        raise HypothesisError("module is not maximal Cohen-Macaulay "
                              f"(depth {depth(module)} < dim {ring.dim})")
    amb = ring.ambient
    a_cols = list(module.rels)
    if len(a_cols) != module.ngens:
        raise HypothesisError("minimal presentation of an MCM module over a "
                              "hypersurface must be square")
    triv = _trivial_quotient(amb)
    f = ring.hypersurface_poly
    b_cols = []
    for j in range(module.ngens):
        target = {(j, m): c for m, c in f.items()}
        coords = express_in_terms(triv, target, a_cols, [], module.twists)
        if coords is None:
            raise RuntimeError("lift of f*I through the presentation failed; "
                               "this indicates a bug, not a legal state")
        col = {}
        for c, poly in enumerate(coords):
            for m, coef in poly.items():
                col[(c, m)] = coef
        b_cols.append(col)
    return MatrixFactorization(ring, a_cols, module.twists, b_cols)


class CompleteResolution:
    """A periodic, doubly infinite, totally acyclic complex of free modules.

    ``cycle[k]`` maps the free module on ``levels[k+1]`` to the one on
    ``levels[k]`` (absolute homological positions base+k+1 -> base+k), and
    ``levels[q]`` equals ``levels[0]`` shifted by the period twist.
    """

    def __init__(self, ring, q, base, cycle, levels, shift, provenance):
        self.ring = ring
        self.q = q
        self.base = base
        self.cycle = [list(c) for c in cycle]
        self.levels = [tuple(t) for t in levels]
        self.shift = shift
        self.provenance = provenance
        self._cache = {}
        if q < 2 or q % 2:
            raise HypothesisError("complete resolutions here have even period >= 2")
        if tuple(t + shift for t in self.levels[0]) != self.levels[q]:
            raise AssertionError("period twists are inconsistent")

    def twists_at(self, i):
        k = (i - self.base) % self.q
        m = (i - self.base - k) // self.q
        return tuple(t + m * self.shift for t in self.levels[k])

    def differential(self, i):
        """Columns of T_i -> T_{i-1}; matrices repeat with period q."""
        k = (i - self.base - 1) % self.q
        return self.cycle[k]

    def verify(self, window):
        """Square-zero and total acyclicity (complex and dual) on [-w, w]."""
        ring = self.ring
        amb = ring.ambient
        for i in range(-window, window + 2):
            comp = compose_cols(amb, self.differential(i),
                                self.differential(i + 1))
            for c in comp:
                if vec_nf_ideal(ring, c):
                    return False
        for i in range(-window, window + 1):
            if not self._homology_zero(i):
                return False
            if not self._dual_homology_zero(i):
                return False
        return True

    def _homology_zero(self, i):
        ring = self.ring
        z = kernel_into_quotient(ring, self.differential(i), [],
                                 self.twists_at(i - 1))
        return subquotient_is_zero(ring, self.twists_at(i), z,
                                   list(self.differential(i + 1)))

    def _dual_homology_zero(self, i):
        # cohomology of Hom(T, R) at i: ker Hom(d_{i+1}) / im Hom(d_i)
        ring = self.ring
        n_i = len(self.twists_at(i))
        d_out = transpose_cols(ring.ambient, self.differential(i + 1), n_i)
        twists_out = tuple(-t for t in self.twists_at(i + 1))
        z = kernel_into_quotient(ring, d_out, [], twists_out)
        b = transpose_cols(ring.ambient, self.differential(i),
                           len(self.twists_at(i - 1)))
        src = tuple(-t for t in self.twists_at(i))
        return subquotient_is_zero(ring, src, z, b)


def complete_resolution(module: PresentedModule, q=None, window=6,
                        search_limit=None) -> CompleteResolution:
    """Build and verify the periodic complete resolution of a module.

    With a hypersurface ring (and q absent or 2) the matrix factorization
    route applies; otherwise the minimal resolution is scanned for an
    isomorphism between syzygies q steps apart, which wraps the resolution
    into a cycle.  Raises when no periodicity is detected; modules of finite
    projective dimension never have one.
    """
    ring = module.ring
    if module.is_zero():
        raise HypothesisError("the zero module has no complete resolution")
    if ring.is_hypersurface and q in (None, 2):
        mf = matrix_factorization_of(module)
        cr = CompleteResolution(
            ring, 2, 0,
            [list(mf.a_cols), list(mf.b_cols)],
            [mf.row_twists, mf.col_twists,
             tuple(t + mf.fdeg for t in mf.row_twists)],
            mf.fdeg, {"via": "matrix-factorization"})
        if not cr.verify(window):
            raise ArithmeticError("matrix-factorization complex failed "
                                  "total-acyclicity verification")
        return cr
    if q is None:
        raise HypothesisError("a period must be given for non-hypersurface rings")
    if q < 2 or q % 2:
        raise HypothesisError("the period must be even and >= 2")
    limit = search_limit if search_limit is not None else max(ring.dim + 2, 3)
    res = resolution_of(module, limit + q + 1)
    for i0 in range(limit + 1):
        if res.betti(i0 + 1) == 0:
            raise HypothesisError("finite projective dimension: Tate "
                                  "(co)homology vanishes and no complete "
                                  "resolution exists")
        low = PresentedModule(ring, res.twists_of_level(i0),
                              res.differential(i0 + 1), normalize=False)
        high = PresentedModule(ring, res.twists_of_level(i0 + q),
                               res.differential(i0 + q + 1), normalize=False)
        cert = is_isomorphic(high, low, allow_twist=True)
        if cert.verdict != ISO:
            continue
        shift = -cert.twist
        v_cols = cert.certificate.cols
        amb = ring.ambient
        v_inv = invert_graded_matrix(ring, v_cols,
                                     tuple(t + shift for t in
                                           res.twists_of_level(i0)))
        levels = [res.twists_of_level(i0 + k) for k in range(q)]
        levels.append(tuple(t + shift for t in res.twists_of_level(i0)))
        cycle = [list(res.differential(i0 + k + 1)) for k in range(q - 1)]
        cycle.append(compose_cols(amb, res.differential(i0 + q), v_inv))
        cr = CompleteResolution(ring, q, i0, cycle, levels, shift,
                                {"via": "detected-periodicity", "base": i0,
                                 "twist": shift})
        if cr.verify(window):
            return cr
    raise HypothesisError(f"no periodicity of period {q} detected within "
                          f"{limit} resolution steps")


# ---------------------------------------------------------------------------
# Tate homology and cohomology


def _tate_tor_data(cr, n_module, i):
    ring = cr.ring
    g_n = n_module.ngens
    if g_n == 0:
        return None
    src = _tensor_twists(cr.twists_at(i), n_module)
    tgt = _tensor_twists(cr.twists_at(i - 1), n_module)
    d_i = _tensor_block_cols(cr.differential(i), g_n)
    z = kernel_into_quotient(ring, d_i,
                             _free_tensor_rels(len(cr.twists_at(i - 1)), n_module),
                             tgt)
    b = _tensor_block_cols(cr.differential(i + 1), g_n) + \
        _free_tensor_rels(len(cr.twists_at(i)), n_module)
    return src, z, b


def tate_tor(cr: CompleteResolution, n_module, i):
    """Tate homology at any integer index, as a presented module."""
    data = _tate_tor_data(cr, n_module, i)
    if data is None:
        return PresentedModule(cr.ring, (), ())
    src, z, b = data
    mod, _ = subquotient(cr.ring, src, z, b)
    return mod


def tate_tor_length(cr, n_module, i):
    key = ("torlen", (i - cr.base) % cr.q, id(n_module))
    got = cr._cache.get(key)
    if got is not None:
        return got
    data = _tate_tor_data(cr, n_module, i)
    if data is None:
        out = 0
    else:
        src, z, b = data
        out = homology_length(cr.ring, src, z, b)
    cr._cache[key] = out
    return out


def _tate_ext_data(cr, n_module, i):
    ring = cr.ring
    g_n = n_module.ngens
    if g_n == 0:
        return None
    n_i = len(cr.twists_at(i))
    src = _hom_twists(cr.twists_at(i), n_module)
    d_out = _hom_block_cols(cr.differential(i + 1), n_i, g_n)
    z = kernel_into_quotient(
        ring, d_out,
        _free_tensor_rels(len(cr.twists_at(i + 1)), n_module),
        _hom_twists(cr.twists_at(i + 1), n_module))
    b = _hom_block_cols(cr.differential(i), len(cr.twists_at(i - 1)), g_n) + \
        _free_tensor_rels(n_i, n_module)
    return src, z, b


def tate_ext(cr: CompleteResolution, n_module, i):
    """Tate cohomology at any integer index, as a presented module."""
    data = _tate_ext_data(cr, n_module, i)
    if data is None:
        return PresentedModule(cr.ring, (), ())
    src, z, b = data
    mod, _ = subquotient(cr.ring, src, z, b)
    return mod


def tate_ext_length(cr, n_module, i):
    key = ("extlen", (i - cr.base) % cr.q, id(n_module))
    got = cr._cache.get(key)
    if got is not None:
        return got
    data = _tate_ext_data(cr, n_module, i)
    if data is None:
        out = 0
    else:
        src, z, b = data
        out = homology_length(cr.ring, src, z, b)
    cr._cache[key] = out
    return out

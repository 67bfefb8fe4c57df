"""Graded quotient rings R = S/I with cached Groebner data.

The grading is by positive integer weights, so quasihomogeneous hypersurface
equations like x^2 - y^3 (weights 3, 2) are honestly homogeneous.  Module
arithmetic over R happens in S carrying the reduced Groebner basis of I.
"""

from .groebner import groebner_basis, reduce_poly
from .hilbert import monomial_quotient_dim
from .ring import PolyRing


class NotDomainError(ValueError):
    """The principal ideal visibly factors, contradicting a domain assertion."""


class QuotientRing:
    """Ambient polynomial ring plus a homogeneous ideal I; R = S/I."""

    def __init__(self, ambient: PolyRing, ideal_gens, *, domain=False):
        self.ambient = ambient
        gens = [g for g in ideal_gens if g]
        for g in gens:
            if ambient.homogeneous_degree(g) is None:
                raise ValueError("ideal generators must be homogeneous: "
                                 + ambient.format_poly(g))
        if gens:
            vecs = [{(0, m): c for m, c in g.items()} for g in gens]
            gb = groebner_basis(ambient, vecs, (0,))
            self.gb = tuple({m: c for (_, m), c in v.items()} for v in gb.elements)
        else:
            self.gb = ()
        if any(len(h) == 1 and ambient.zero_mono in h for h in self.gb):
            raise ValueError("the ideal is the unit ideal")
        self.ideal_gens = tuple(gens)
        self._initial_ideal = tuple(max(h, key=ambient.mono_key) for h in self.gb)
        self.dim = monomial_quotient_dim(ambient.nvars, self._initial_ideal)
        self.is_hypersurface = len(self.gb) == 1
        self.hypersurface_poly = self.gb[0] if self.is_hypersurface else None
        self.domain = bool(domain)
        self._caches = {}

    def __eq__(self, other):
        return (isinstance(other, QuotientRing) and other.ambient == self.ambient
                and other.gb == self.gb)

    def __hash__(self):
        return hash((self.ambient, tuple(tuple(sorted(h.items())) for h in self.gb)))

    def __repr__(self):
        amb = repr(self.ambient)
        if not self.gb:
            return amb
        gens = ", ".join(self.ambient.format_poly(g) for g in self.ideal_gens)
        return f"{amb}/({gens})"

    @property
    def p(self):
        return self.ambient.p

    def nf(self, f):
        """Normal form of a polynomial modulo I."""
        if not self.gb:
            return dict(f)
        return reduce_poly(self.ambient, f, self.gb)

    def is_zero(self, f) -> bool:
        return not self.nf(f)

    def variables(self):
        return [self.ambient.var(i) for i in range(self.ambient.nvars)]

    def irrelevant_ideal(self):
        return self.variables()


def _quadratic_form_rank(ring: PolyRing, f) -> int:
    """Rank of the Gram matrix of a quadratic form (all weights 1, p odd)."""
    n = ring.nvars
    p = ring.p
    gram = [[0] * n for _ in range(n)]
    for m, c in f.items():
        idx = [i for i, e in enumerate(m) for _ in range(e)]
        if len(idx) != 2:
            return -1
        i, j = idx
        if i == j:
            gram[i][i] = (gram[i][i] + 2 * c) % p
        else:
            gram[i][j] = (gram[i][j] + c) % p
            gram[j][i] = (gram[j][i] + c) % p
    rank = 0
    mat = [row[:] for row in gram]
    for col in range(n):
        piv = next((r for r in range(rank, n) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        for r in range(n):
            if r != rank and mat[r][col]:
                q = mat[r][col] * inv % p
                mat[r] = [(a - q * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def _poly_divides(ring: PolyRing, g, f) -> bool:
    """Exact divisibility test g | f via leading-term division."""
    rem = dict(f)
    while rem:
        lt_r = ring.leading_term(rem)
        lt_g = ring.leading_term(g)
        q = ring.term_divide(lt_r, lt_g)
        if q is None:
            return False
        rem = ring.sub(rem, ring.mul_term(g, q[0], q[1]))
    return True


def principal_irreducible_scan(ring: PolyRing, f, budget=200_000):
    """Best-effort irreducibility check for a homogeneous polynomial.

    Returns True (irreducible), False (a factorization was found), or None
    when the scan is inconclusive within the budget.
    """
    deg = ring.homogeneous_degree(f)
    if deg is None or not f:
        return None
    if len(f) == 1:
        m = next(iter(f))
        return sum(m) == 1  # a single variable is prime; other monomials split
    # quadratic form over odd characteristic, standard grading
    if all(w == 1 for w in ring.weights) and deg == 2 and ring.p != 2:
        r = _quadratic_form_rank(ring, f)
        if r >= 0:
            return r >= 3
    # binomial c1*x^a + c2*y^b in two variables with gcd(a, b) = 1
    if ring.nvars == 2 and len(f) == 2:
        monos = sorted(f, reverse=True)
        if monos[0][1] == 0 and monos[1][0] == 0:
            a, b = monos[0][0], monos[1][1]
            if a > 0 and b > 0:
                from math import gcd
                if gcd(a, b) == 1:
                    return True
    # brute-force divisor scan over low-degree homogeneous candidates
    p = ring.p
    for d in range(1, deg):
        monos = ring.monomials_of_degree(d)
        if not monos:
            continue
        count = p ** (len(monos) - 1)
        if count > budget:
            return None
        from itertools import product
        for lead in range(len(monos)):
            for rest in product(range(p), repeat=len(monos) - lead - 1):
                g = {monos[lead]: 1}
                for m, c in zip(monos[lead + 1:], rest):
                    if c:
                        g[m] = c
                if _poly_divides(ring, g, f):
                    return False
    return True


def define_ring(variables, weights, p, ideal_gens, *, order="grevlex",
                domain=False, check_domain=True) -> QuotientRing:
    """Construct R = F_p[variables]/(ideal_gens) with the given weights.

    ``ideal_gens`` may be polynomials (dicts) or strings in the polynomial
    grammar.  A ``domain=True`` assertion on a principal ideal is checked by
    a bounded irreducibility scan; a visible factorization is an error, an
    inconclusive scan keeps the assertion.
    """
    ring = PolyRing(variables, weights, p, order=order)
    gens = []
    for g in ideal_gens:
        if isinstance(g, str):
            from .grammar import parse_polynomial
            g = parse_polynomial(ring, g)
        gens.append(g)
    rq = QuotientRing(ring, gens, domain=domain)
    if domain and check_domain and rq.is_hypersurface and len(rq.ideal_gens) >= 1:
        verdict = principal_irreducible_scan(ring, rq.gb[0])
        if verdict is False:
            raise NotDomainError("hypersurface equation factors; not a domain: "
                                 + ring.format_poly(rq.gb[0]))
    return rq

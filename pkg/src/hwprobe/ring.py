"""Weighted-graded multivariate polynomial arithmetic over a prime field.

A polynomial is a dict mapping exponent tuples to nonzero coefficients in
``[1, p)``; the zero polynomial is the empty dict.  A *term* is a pair
``(monomial, coefficient)``.  All operations are pure functions on these
dicts, dispatched through a :class:`PolyRing` that fixes the variables, the
weights of the grading and the monomial order.
"""

from .field import PrimeField

Mono = tuple  # exponent vector
Poly = dict   # Mono -> coefficient in [1, p)


class WeightedGrevLex:
    """Weighted degree first, ties broken reverse-lexicographically.

    ``u > v`` iff ``deg u > deg v``, or degrees agree and the last nonzero
    entry of ``u - v`` is negative.
    """

    kind = "grevlex"

    def __init__(self, weights):
        self.weights = tuple(weights)

    def mono_key(self, m: Mono):
        w = self.weights
        return (sum(e * wi for e, wi in zip(m, w)),
                tuple(-e for e in reversed(m)))


class Lex:
    """Pure lexicographic order on exponent vectors."""

    kind = "lex"

    def __init__(self, weights):
        self.weights = tuple(weights)

    def mono_key(self, m: Mono):
        return m


ORDER_KINDS = {"grevlex": WeightedGrevLex, "lex": Lex}


class RingMismatch(ValueError):
    """Operands belong to different rings."""


class PolyRing:
    """Ambient polynomial ring: named variables, positive weights, F_p."""

    def __init__(self, names, weights, p, order="grevlex"):
        names = tuple(names)
        weights = tuple(int(w) for w in weights)
        if len(names) != len(weights):
            raise ValueError("one weight per variable required")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names: {names}")
        if any(w < 1 for w in weights):
            raise ValueError(f"weights must be >= 1: {weights}")
        self.names = names
        self.weights = weights
        self.nvars = len(names)
        self.field = PrimeField(p)
        self.p = self.field.p
        if isinstance(order, str):
            order = ORDER_KINDS[order](weights)
        self.order = order
        self.mono_key = order.mono_key
        self.zero_mono = (0,) * self.nvars
        self._mono_deg_cache = {}
        self._monos_by_deg = {}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.names == self.names
                and other.weights == self.weights and other.p == self.p
                and other.order.kind == self.order.kind)

    def __hash__(self):
        return hash((self.names, self.weights, self.p, self.order.kind))

    def __repr__(self):
        vs = ",".join(self.names)
        return f"F{self.p}[{vs}; weights={list(self.weights)}]"

    # -- monomials ---------------------------------------------------------

    def mono_deg(self, m: Mono) -> int:
        d = self._mono_deg_cache.get(m)
        if d is None:
            d = sum(e * w for e, w in zip(m, self.weights))
            self._mono_deg_cache[m] = d
        return d

    def mono_mul(self, a: Mono, b: Mono) -> Mono:
        return tuple(x + y for x, y in zip(a, b))

    def mono_divides(self, a: Mono, b: Mono) -> bool:
        """a | b componentwise."""
        return all(x <= y for x, y in zip(a, b))

    def mono_div(self, a: Mono, b: Mono):
        """a / b, or None when not divisible."""
        q = tuple(x - y for x, y in zip(a, b))
        return None if any(e < 0 for e in q) else q

    def mono_lcm(self, a: Mono, b: Mono) -> Mono:
        return tuple(max(x, y) for x, y in zip(a, b))

    def monomials_of_degree(self, d: int):
        """All exponent tuples of weighted degree exactly d (cached)."""
        got = self._monos_by_deg.get(d)
        if got is not None:
            return got
        out = []
        n, w = self.nvars, self.weights

        def rec(i, rem, acc):
            if i == n - 1:
                if rem % w[i] == 0:
                    out.append(tuple(acc + [rem // w[i]]))
                return
            for e in range(rem // w[i] + 1):
                rec(i + 1, rem - e * w[i], acc + [e])

        if d >= 0:
            if n:
                rec(0, d, [])
            elif d == 0:
                out.append(())
        got = tuple(out)
        self._monos_by_deg[d] = got
        return got

    # -- polynomial arithmetic ---------------------------------------------

    def zero(self) -> Poly:
        return {}

    def one(self) -> Poly:
        return {self.zero_mono: 1}

    def const(self, c: int) -> Poly:
        c %= self.p
        return {self.zero_mono: c} if c else {}

    def var(self, i: int) -> Poly:
        m = [0] * self.nvars
        m[i] = 1
        return {tuple(m): 1}

    def add(self, f: Poly, g: Poly) -> Poly:
        p = self.p
        out = dict(f)
        for m, c in g.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    def sub(self, f: Poly, g: Poly) -> Poly:
        p = self.p
        out = dict(f)
        for m, c in g.items():
            v = (out.get(m, 0) - c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    def neg(self, f: Poly) -> Poly:
        p = self.p
        return {m: p - c for m, c in f.items()}

    def scale(self, f: Poly, c: int) -> Poly:
        c %= self.p
        if not c:
            return {}
        p = self.p
        return {m: cc * c % p for m, cc in f.items()} if c != 1 else dict(f)

    def mul_term(self, f: Poly, m: Mono, c: int) -> Poly:
        c %= self.p
        if not c or not f:
            return {}
        p = self.p
        out = {}
        for mm, cc in f.items():
            out[tuple(x + y for x, y in zip(mm, m))] = cc * c % p
        return out

    def mul(self, f: Poly, g: Poly) -> Poly:
        p = self.p
        out = {}
        if len(f) > len(g):
            f, g = g, f
        for m1, c1 in f.items():
            for m2, c2 in g.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    del out[m]
        return out

    def pow(self, f: Poly, e: int) -> Poly:
        out = self.one()
        for _ in range(e):
            out = self.mul(out, f)
        return out

    def poly_arith(self, f: Poly, g: Poly, which: str) -> Poly:
        """Exact sum or product; zero coefficients are never stored."""
        if which == "add":
            return self.add(f, g)
        if which == "mul":
            return self.mul(f, g)
        raise ValueError(f"unknown operation {which!r}")

    # -- structure ----------------------------------------------------------

    def homogeneous_degree(self, f: Poly):
        """Common weighted degree of the terms, or None when inhomogeneous.

        The zero polynomial is homogeneous of every degree; returns 0 for it.
        """
        degs = {self.mono_deg(m) for m in f}
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def is_homogeneous(self, f: Poly) -> bool:
        return self.homogeneous_degree(f) is not None

    def leading_term(self, f: Poly):
        """Order-maximal term ``(monomial, coefficient)`` of a nonzero poly."""
        if not f:
            raise ZeroDivisionError("leading term of the zero polynomial")
        m = max(f, key=self.mono_key)
        return m, f[m]

    def term_divide(self, t, u):
        """Quotient term t/u with exact coefficient division, else None."""
        (mt, ct), (mu, cu) = t, u
        q = self.mono_div(mt, mu)
        if q is None:
            return None
        return (q, self.field.div(ct, cu))

    # -- formatting ----------------------------------------------------------

    def format_poly(self, f: Poly) -> str:
        if not f:
            return "0"
        parts = []
        for m in sorted(f, key=self.mono_key, reverse=True):
            c = f[m]
            factors = []
            if c != 1 or m == self.zero_mono:
                factors.append(str(c))
            for name, e in zip(self.names, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

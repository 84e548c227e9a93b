"""Exact linear algebra over Q and the graded membership oracle.

The oracle decides membership of a homogeneous polynomial in a homogeneous
ideal degree-by-degree on the monomial basis of one graded piece, entirely
independently of the Groebner engine.  Degree-0 constant generators are
handled by reducing against their monic defining relations, i.e. by working
over the finite-dimensional constant ring they present.
"""

from __future__ import annotations

from fractions import Fraction

from .ring import Polynomial

__all__ = [
    "PieceTooLarge",
    "SpanQ",
    "monomials_of_degree",
    "reduce_constants",
    "linear_membership",
    "graded_piece_dims",
]


class PieceTooLarge(RuntimeError):
    def __init__(self, size, bound):
        super().__init__("piece too large")
        self.size = size
        self.bound = bound


class SpanQ:
    """Incrementally row-reduced span of sparse Q-vectors (dict index -> coeff)."""

    def __init__(self):
        self.pivots = {}  # pivot index -> reduced vector with 1 at pivot

    def _reduce(self, vec):
        vec = dict(vec)
        for p in sorted(self.pivots):
            c = vec.get(p)
            if not c:
                continue
            pv = self.pivots[p]
            for j, a in pv.items():
                s = vec.get(j, Fraction(0)) - c * a
                if s == 0:
                    vec.pop(j, None)
                else:
                    vec[j] = s
        return {j: c for j, c in vec.items() if c != 0}

    def add(self, vec):
        """Insert a vector; returns True if it enlarged the span."""
        red = self._reduce(vec)
        if not red:
            return False
        p = min(red)
        lead = red[p]
        red = {j: c / lead for j, c in red.items()}
        # back-substitute into existing pivots
        for q, pv in self.pivots.items():
            c = pv.get(p)
            if c:
                for j, a in red.items():
                    s = pv.get(j, Fraction(0)) - c * a
                    if s == 0:
                        pv.pop(j, None)
                    else:
                        pv[j] = s
        self.pivots[p] = red
        return True

    def contains(self, vec):
        return not self._reduce(vec)

    @property
    def rank(self):
        return len(self.pivots)


def solve_linear(columns, target, ncols_meta=None):
    """Solve sum_i x_i * columns[i] = target exactly over Q.

    ``columns``/``target`` are sparse dicts.  Returns the coefficient list or
    None if the target is outside the span.
    """
    rows = set(target)
    for col in columns:
        rows.update(col)
    rows = sorted(rows)
    rowpos = {r: i for i, r in enumerate(rows)}
    m = len(rows)
    n = len(columns)
    # dense augmented elimination (pieces are small by construction)
    mat = [[Fraction(0)] * (n + 1) for _ in range(m)]
    for j, col in enumerate(columns):
        for r, c in col.items():
            mat[rowpos[r]][j] = c
    for r, c in target.items():
        mat[rowpos[r]][n] = c
    piv_cols = []
    r0 = 0
    for j in range(n):
        piv = next((i for i in range(r0, m) if mat[i][j] != 0), None)
        if piv is None:
            continue
        mat[r0], mat[piv] = mat[piv], mat[r0]
        inv = 1 / mat[r0][j]
        mat[r0] = [a * inv for a in mat[r0]]
        for i in range(m):
            if i != r0 and mat[i][j] != 0:
                c = mat[i][j]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[r0])]
        piv_cols.append(j)
        r0 += 1
        if r0 == m:
            break
    for i in range(r0, m):
        if mat[i][n] != 0:
            return None
    # check rows below pivots consistent
    for i in range(m):
        if all(mat[i][j] == 0 for j in range(n)) and mat[i][n] != 0:
            return None
    xs = [Fraction(0)] * n
    for i, j in enumerate(piv_cols):
        xs[j] = mat[i][n]
    return xs


def monomials_of_degree(ring, degree, caps=None):
    """All exponent vectors of exact weighted degree ``degree``.

    ``caps`` bounds the exponent of weight-0 variables (cap = first unused
    exponent); without a cap a weight-0 variable makes the piece infinite and
    is an error.
    """
    degree = Fraction(degree)
    target = degree * ring.weight_scale
    if target.denominator != 1:
        return []
    target = int(target)
    if target < 0:
        return []
    caps = caps or {}
    ws = ring.weights
    for i, w in enumerate(ws):
        if w == 0 and i not in caps:
            raise ValueError(f"no exponent cap for degree-0 variable {ring.names[i]!r}")
    out = []
    exp = [0] * ring.nvars

    def rec(i, rem):
        if i == ring.nvars:
            if rem == 0:
                out.append(tuple(exp))
            return
        w = ws[i]
        if w == 0:
            for e in range(caps[i]):
                exp[i] = e
                rec(i + 1, rem)
            exp[i] = 0
        else:
            e = 0
            while e * w <= rem:
                exp[i] = e
                rec(i + 1, rem - e * w)
                e += 1
            exp[i] = 0

    rec(0, target)
    return out


def reduce_constants(f, rules):
    """Normal form under monic constant rewrite rules (var^e -> rhs).

    ``rules`` is a list of (var_index, exponent, rhs_polynomial), newest
    constants first; each rhs only involves older constants, so repeated
    passes terminate.
    """
    if not rules:
        return f
    ring = f.ring
    changed = True
    while changed:
        changed = False
        for i, e, rhs in rules:
            hit = any(exp[i] >= e for exp in f.terms)
            if not hit:
                continue
            changed = True
            acc = ring.zero
            for exp, c in f.terms.items():
                q, r = divmod(exp[i], e)
                if q == 0:
                    acc = acc + ring.monomial(exp, c)
                else:
                    base = list(exp)
                    base[i] = r
                    acc = acc + ring.monomial(base, c) * rhs ** q
            f = acc
    return f


def _vec(poly):
    return dict(poly.terms)


def linear_membership(f, gens, const_rules=(), caps=None, piece_bound=5000):
    """Exact-linear-algebra membership of homogeneous f in (gens) + constants.

    All generators must be homogeneous (constant relations go in
    ``const_rules`` instead).  Returns True/False.
    """
    if f.is_zero():
        return True
    ring = f.ring
    if not f.is_homogeneous():
        raise ValueError("oracle input must be homogeneous")
    f = reduce_constants(f, const_rules)
    if f.is_zero():
        return True
    d = f.homogeneous_degree()
    basis = monomials_of_degree(ring, d, caps)
    if len(basis) > piece_bound:
        raise PieceTooLarge(len(basis), piece_bound)
    span = SpanQ()
    for g in gens:
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError("oracle generators must be homogeneous")
        gd = g.homogeneous_degree()
        for mono in monomials_of_degree(ring, d - gd, caps):
            col = reduce_constants(ring.monomial(mono) * g, const_rules)
            if not col.is_zero():
                span.add(_vec(col))
    return span.contains(_vec(f))


def graded_piece_dims(ring, degree, gens, const_rules=(), caps=None, piece_bound=5000):
    """(monomial basis, ideal-span) of one graded piece of ring/(gens)+constants."""
    basis = monomials_of_degree(ring, degree, caps)
    if len(basis) > piece_bound:
        raise PieceTooLarge(len(basis), piece_bound)
    span = SpanQ()
    for g in gens:
        if g.is_zero():
            continue
        gd = g.homogeneous_degree()
        for mono in monomials_of_degree(ring, Fraction(degree) - gd, caps):
            col = reduce_constants(ring.monomial(mono) * g, const_rules)
            if not col.is_zero():
                span.add(_vec(col))
    return basis, span

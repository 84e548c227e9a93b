"""Graded dimension tables for weighted hypersurfaces and Segre products.

Three independent routes to the degree-wise dimensions of second local
cohomology of a two-dimensional graded ring:

* a closed-form count over the free basis 1, c, ..., c^(e-1) of the
  hypersurface over its parameter subring,
* a duality symmetry (the table mirrors the Hilbert table around the
  a-invariant), and
* a truncated colimit oracle working directly on a presented ring: graded
  pieces of P/(f^t, g^t) connected by multiplication with f*g, accepted once
  consecutive levels agree with an injective transition.

The Kuenneth combinator assembles the H^2 table of a Segre product of two
Cohen-Macaulay factors from the factors' Hilbert and H^2 tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg

__all__ = [
    "HypersurfaceDatum",
    "CohomologyTable",
    "Unstable",
    "hilbert_dim",
    "h2_dim_free_basis",
    "h2_dim_duality",
    "h2_dim_truncated",
    "kunneth_h2",
    "segre_hilbert_dim",
]


class Unstable(RuntimeError):
    """Truncated oracle did not stabilize within the level budget."""

    def __init__(self, ranks):
        super().__init__("unstable")
        self.ranks = list(ranks)


@dataclass(frozen=True)
class HypersurfaceDatum:
    """K[a,b,c]/(relation): weights of a, b, c and the monic c-degree e.

    ``e = 1`` encodes a polynomial ring in the two parameters (no relation,
    the last variable is absent).  The ring is a free module with basis
    1, c, ..., c^(e-1) over K[a,b], which is what every count below uses.
    """

    wa: Fraction
    wb: Fraction
    wc: Fraction
    e: int
    label: str = ""
    cohen_macaulay: bool = True

    def __post_init__(self):
        object.__setattr__(self, "wa", Fraction(self.wa))
        object.__setattr__(self, "wb", Fraction(self.wb))
        object.__setattr__(self, "wc", Fraction(self.wc))
        if self.e < 1 or self.wa <= 0 or self.wb <= 0 or self.wc <= 0:
            raise ValueError("invalid hypersurface datum")

    @property
    def a_invariant(self):
        # relation degree e*wc minus the total variable weight
        return self.e * self.wc - (self.wa + self.wb + self.wc)


@dataclass
class CohomologyTable:
    entries: dict
    method: str
    stabilization: dict = field(default_factory=dict)

    def pairs(self):
        return sorted(self.entries.items())

    def __eq__(self, other):
        if not isinstance(other, CohomologyTable):
            return NotImplemented
        return self.entries == other.entries


def _count_pairs(wa, wb, rem, lo=0):
    """#{(i, j) : i, j >= lo, i*wa + j*wb = rem}."""
    if rem < lo * (wa + wb):
        return 0
    n = 0
    i = lo
    while i * wa + lo * wb <= rem:
        j = (rem - i * wa) / wb
        if j.denominator == 1 and j >= lo:
            n += 1
        i += 1
    return n


def hilbert_dim(H, d):
    """dim_K of the degree-d piece: monomials a^i b^j c^eps, eps < e."""
    d = Fraction(d)
    return sum(_count_pairs(H.wa, H.wb, d - eps * H.wc) for eps in range(H.e))


def h2_dim_free_basis(H, d):
    """dim_K [H^2]_d: classes c^eps / (a^i b^j) with i, j >= 1."""
    d = Fraction(d)
    return sum(_count_pairs(H.wa, H.wb, eps * H.wc - d, lo=1) for eps in range(H.e))


def h2_dim_duality(H, d):
    """Mirror of the Hilbert table around the a-invariant."""
    return hilbert_dim(H, H.a_invariant - Fraction(d))


def _quotient_piece(P, degree, extra, rules, caps, piece_bound):
    """(quotient-basis monomials, ideal span) of [P / (extra)]_degree."""
    rring, project, rels = P.reduced()
    graded = [r for r in rels if not all(rring.degrees[i] == 0 for i in r.support_vars())]
    basis, span = linalg.graded_piece_dims(rring, degree, list(extra) + graded,
                                           rules, caps, piece_bound)
    qbasis = [m for m in basis if m not in span.pivots]
    return qbasis, span


def h2_dim_truncated(P, params, d, t_max=8, piece_bound=5000):
    """Stabilized colimit dimension of [P/(f^t, g^t)] under multiplication by fg.

    Stabilization = equal dimensions at two consecutive levels plus an
    injective transition map, required only once the piece degree has passed
    the total weight of the positive variables (earlier pieces can agree by
    accident while the colimit is still growing).
    """
    rring, project, rels = P.reduced()
    f, g = (project(P.ring.parse(p) if isinstance(p, str) else p) for p in params)
    rules = P.constant_rules()
    caps = P.constant_caps()
    # dimensions are over the coefficient field the constants present
    unit = 1
    for _i, e, _r in rules:
        unit *= e
    d = Fraction(d)
    shift = f.homogeneous_degree() + g.homogeneous_degree()
    floor = sum(deg for deg in rring.degrees if deg > 0)
    fg = f * g

    levels = {}

    def level(t):
        if t not in levels:
            levels[t] = _quotient_piece(P, d + t * shift, [f ** t, g ** t],
                                        rules, caps, piece_bound)
        return levels[t]

    ranks = []
    for t in range(1, t_max + 1):
        qb, _ = level(t)
        dim_t = len(qb)
        assert dim_t % unit == 0
        ranks.append(dim_t // unit)
        if len(ranks) < 2 or ranks[-1] != ranks[-2]:
            continue
        if d + (t - 1) * shift < floor:
            continue  # too early to trust an accidental plateau
        src, _ = level(t - 1)
        _, tspan = level(t)
        image = linalg.SpanQ()
        injective = True
        for m in src:
            col = linalg.reduce_constants(rring.monomial(m) * fg, rules)
            if not image.add(tspan._reduce(dict(col.terms))):
                injective = False
                break
        if injective:
            return ranks[-1], {"level": t, "stable": True, "ranks": ranks}
    raise Unstable(ranks)


def kunneth_h2(datumA, datumB, degrees):
    """H^2 table of the Segre product A # B over the given (integer) degrees.

    dim[H^2(A#B)]_n = dim A_n * dim[H^2 B]_n + dim[H^2 A]_n * dim B_n,
    valid when both factors are two-dimensional Cohen-Macaulay rings.
    """
    for H in (datumA, datumB):
        if not H.cohen_macaulay:
            raise ValueError("unsupported: non-CM factor")
    entries = {}
    for n in degrees:
        n = Fraction(n)
        entries[n] = (hilbert_dim(datumA, n) * h2_dim_free_basis(datumB, n)
                      + h2_dim_free_basis(datumA, n) * hilbert_dim(datumB, n))
    return CohomologyTable(entries, "kunneth")


def segre_hilbert_dim(datumA, datumB, n):
    """dim [A#B]_n = dim A_n * dim B_n."""
    n = Fraction(n)
    return hilbert_dim(datumA, n) * hilbert_dim(datumB, n)

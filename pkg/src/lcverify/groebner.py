"""Buchberger engine with reduction traces.

Produces reduced Groebner bases, normal forms with quotients, ideal-membership
certificates (cofactor vectors over the *original* generators), colon ideals
via tag-variable elimination, and ring-map kernels via block elimination.

The S-pair strategy is the normal one (smallest lcm in the ambient order) with
the product and chain criteria.  A step budget guards against pathological
inputs; every reduction step counts against it.
"""

from __future__ import annotations

from fractions import Fraction
from heapq import heapify, heappop, heappush

from .ring import Polynomial, Ring

__all__ = [
    "BudgetExceeded",
    "StepBudget",
    "DEFAULT_BUDGET",
    "GroebnerBasis",
    "MembershipCertificate",
    "buchberger",
    "normal_form",
    "ideal_member",
    "colon_ideal",
    "ring_map_kernel",
]

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, stats):
        super().__init__("budget")
        self.stats = stats


class StepBudget:
    """Mutable reduction-step counter shared across one computation."""

    __slots__ = ("steps", "limit", "spairs")

    def __init__(self, limit=DEFAULT_BUDGET):
        self.steps = 0
        self.spairs = 0
        self.limit = limit

    def tick(self, n=1):
        self.steps += n
        if self.steps > self.limit:
            raise BudgetExceeded({"steps": self.steps, "spairs": self.spairs})

    def stats(self):
        return {"steps": self.steps, "spairs": self.spairs}


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def normal_form(f, basis, budget=None, quotients=False):
    """Fully reduce ``f`` by ``basis``; optionally return division quotients.

    No term of the result is divisible by any leading monomial of the basis,
    and f - result lies in the ideal generated by the basis.
    """
    if budget is None:
        budget = StepBudget()
    ring = f.ring
    nkey = ring.nkey_of
    lms = [g.leading_monomial() for g in basis]
    lcs = [g.leading_coeff() for g in basis]
    # sparse divisibility masks and pre-split tails for the hot loop
    masks = [tuple((i, e) for i, e in enumerate(lm) if e) for lm in lms]
    tails = [tuple(t for t in g.terms.items() if t[0] != lm)
             for g, lm in zip(basis, lms)]
    qs = [dict() for _ in basis] if quotients else None
    rem = {}
    work = dict(f.terms)
    heap = [(nkey(e), e) for e in work]
    heapify(heap)
    while heap:
        _, exp = heappop(heap)
        c = work.pop(exp, None)
        if c is None:
            continue  # stale entry: term cancelled since it was queued
        for i, mask in enumerate(masks):
            if all(exp[k] >= e for k, e in mask):
                budget.tick()
                t = _exp_sub(exp, lms[i])
                cc = c / lcs[i]
                if quotients:
                    qs[i][t] = qs[i].get(t, Fraction(0)) + cc
                for e2, c2 in tails[i]:
                    e = tuple(x + y for x, y in zip(t, e2))
                    s = work.get(e)
                    if s is None:
                        work[e] = -cc * c2
                        heappush(heap, (nkey(e), e))
                    else:
                        s = s - cc * c2
                        if s == 0:
                            del work[e]
                        else:
                            work[e] = s
                break
        else:
            rem[exp] = c
    nf = Polynomial(ring, rem)
    if quotients:
        return nf, [ring.from_terms(q) for q in qs]
    return nf


class MembershipCertificate:
    """Cofactors proving target = sum_i cofactor_i * generator_i, exactly."""

    def __init__(self, target, generators, cofactors):
        self.target = target
        self.generators = list(generators)
        self.cofactors = list(cofactors)

    def reexpand(self):
        acc = self.target.ring.zero
        for q, g in zip(self.cofactors, self.generators):
            acc = acc + q * g
        return acc

    def is_valid(self):
        return self.reexpand() == self.target

    def nonzero_entries(self):
        return [(i, q) for i, q in enumerate(self.cofactors) if not q.is_zero()]


class GroebnerBasis:
    """Reduced basis plus (optionally) its expression over the input generators."""

    def __init__(self, basis, origin, reps, stats):
        self.basis = list(basis)
        self.origin = list(origin)
        self.reps = reps  # reps[i][j]: cofactor of origin[j] in basis[i], or None
        self.stats = dict(stats)

    @property
    def ring(self):
        return self.basis[0].ring if self.basis else self.origin[0].ring

    def is_trivial(self):
        return len(self.basis) == 1 and self.basis[0] == self.basis[0].ring.one

    def normal_form(self, f, budget=None):
        return normal_form(f, self.basis, budget)

    def member(self, f, budget=None):
        """Membership of f in the ideal of the origin generators.

        Returns (True, MembershipCertificate) or (False, witness normal form).
        Certificates require the basis to have been computed with tracking.
        """
        nf, qs = normal_form(f, self.basis, budget, quotients=True)
        if not nf.is_zero():
            return False, nf
        if self.reps is None:
            raise ValueError("basis computed without certificate tracking")
        ring = self.ring
        cofs = [ring.zero for _ in self.origin]
        for q, rep in zip(qs, self.reps):
            if q.is_zero():
                continue
            for j, r in enumerate(rep):
                if not r.is_zero():
                    cofs[j] = cofs[j] + q * r
        cert = MembershipCertificate(f, self.origin, cofs)
        assert cert.is_valid(), "certificate failed to re-expand"
        return True, cert


def _spoly_parts(gi, gj):
    lmi, lci = gi.leading_term()
    lmj, lcj = gj.leading_term()
    l = _exp_lcm(lmi, lmj)
    ring = gi.ring
    ti = ring.monomial(_exp_sub(l, lmi), 1 / lci)
    tj = ring.monomial(_exp_sub(l, lmj), 1 / lcj)
    return ti, tj


def buchberger(gens, track=False, budget=None):
    """Reduced Groebner basis of the given generators, deterministically.

    With ``track=True`` each basis element carries its cofactor vector over the
    input generators, enabling membership certificates downstream.
    """
    gens = [g for g in gens]
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    if budget is None:
        budget = StepBudget()
    key = ring.key_of

    basis = []
    reps = []  # parallel to basis

    def unit_rep(j):
        return [ring.one if k == j else ring.zero for k in range(len(gens))]

    def reduce_rep(rep, qs):
        # rep -= sum_k qs[k] * reps[k]
        out = list(rep)
        for q, rk in zip(qs, reps):
            if q.is_zero():
                continue
            for j, r in enumerate(rk):
                if not r.is_zero():
                    out[j] = out[j] - q * r
        return out

    def add_element(p, rep):
        lc = p.leading_coeff()
        if lc != 1:
            p = p.scale(1 / lc)
            if track:
                rep = [r.scale(1 / lc) for r in rep]
        basis.append(p)
        reps.append(rep if track else None)

    # Initial interreduction: insert in ascending leading-term order so that
    # redundant (consequence) generators reduce away immediately.
    order_in = sorted(range(len(gens)), key=lambda i: (key(gens[i].leading_monomial()) if gens[i] else (), i))
    for i in order_in:
        g = gens[i]
        if g.is_zero():
            continue
        if track:
            nf, qs = normal_form(g, basis, budget, quotients=True)
        else:
            nf = normal_form(g, basis, budget)
        if nf.is_zero():
            continue
        rep = reduce_rep(unit_rep(i), qs) if track else None
        add_element(nf, rep)

    pairs = []
    done = set()

    def push_pair(i, j):
        l = _exp_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        heappush(pairs, (key(l), i, j))

    n0 = len(basis)
    for j in range(n0):
        for i in range(j):
            push_pair(i, j)

    while pairs:
        _, i, j = heappop(pairs)
        done.add((i, j))
        budget.spairs += 1
        lmi = basis[i].leading_monomial()
        lmj = basis[j].leading_monomial()
        # product criterion
        if _exp_lcm(lmi, lmj) == tuple(a + b for a, b in zip(lmi, lmj)):
            continue
        # chain criterion
        l = _exp_lcm(lmi, lmj)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k].leading_monomial(), l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        ti, tj = _spoly_parts(basis[i], basis[j])
        s = ti * basis[i] - tj * basis[j]
        if track:
            nf, qs = normal_form(s, basis, budget, quotients=True)
        else:
            nf = normal_form(s, basis, budget)
        if nf.is_zero():
            continue
        if track:
            rep = [ti * r for r in reps[i]]
            rep = [a - tj * b for a, b in zip(rep, reps[j])]
            rep = reduce_rep(rep, qs)
        else:
            rep = None
        add_element(nf, rep)
        new = len(basis) - 1
        for k in range(new):
            push_pair(k, new)

    # Auto-reduce: drop elements whose leading term is divisible by another's,
    # then fully reduce each element by the rest.
    alive = list(range(len(basis)))
    alive.sort(key=lambda i: key(basis[i].leading_monomial()))
    kept = []
    for i in alive:
        lm = basis[i].leading_monomial()
        if any(_divides(basis[k].leading_monomial(), lm) for k in kept):
            continue
        kept.append(i)
    final = []
    final_reps = []
    for i in kept:
        others = [basis[k] for k in kept if k != i]
        if track:
            nf, qs = normal_form(basis[i], others, budget, quotients=True)
        else:
            nf = normal_form(basis[i], others, budget)
        assert not nf.is_zero()
        if track:
            rep = list(reps[i])
            for q, k in zip(qs, [k for k in kept if k != i]):
                if q.is_zero():
                    continue
                for j, r in enumerate(reps[k]):
                    if not r.is_zero():
                        rep[j] = rep[j] - q * r
        else:
            rep = None
        lc = nf.leading_coeff()
        if lc != 1:
            nf = nf.scale(1 / lc)
            if track:
                rep = [r.scale(1 / lc) for r in rep]
        final.append(nf)
        final_reps.append(rep)
    # The auto-reduction above can change leading terms order; sort for determinism.
    idx = sorted(range(len(final)), key=lambda i: key(final[i].leading_monomial()))
    final = [final[i] for i in idx]
    final_reps = [final_reps[i] for i in idx] if track else None

    gb = GroebnerBasis(final, gens, final_reps, budget.stats())
    return gb


def ideal_member(f, gens, gb=None, budget=None):
    """Decide membership of f in the ideal of ``gens`` with a certificate.

    Returns (True, MembershipCertificate) or (False, witness normal form).
    """
    if gb is None:
        gb = buchberger(gens, track=True, budget=budget)
    return gb.member(f, budget)


def colon_ideal(gens, f, budget=None):
    """Generators of (I : f), via (I ∩ (f)) / f with a tag variable.

    I ∩ (f) is the tag-eliminated ideal of tau*I + (1-tau)*(f); each survivor
    divides exactly by f (asserted).
    """
    if f.is_zero():
        raise ValueError("colon by zero")
    ring = f.ring
    ext = ring.extend("tau#", 1)
    tau = ext.var("tau#")
    tagged = [tau * ext.lift(g) for g in gens]
    tagged.append((ext.one - tau) * ext.lift(f))
    gb = buchberger(tagged, track=False, budget=budget)
    tau_idx = ext.index["tau#"]
    base, keep = ext.drop([tau_idx])
    out = []
    for g in gb.basis:
        if tau_idx in g.support_vars():
            continue
        low = ext.project(g, base, keep)
        low = _retarget(low, ring)
        q, r = _exact_divide(low, f, budget)
        assert r.is_zero(), "intersection element not divisible by f"
        if not q.is_zero():
            out.append(q)
    return out


def _retarget(p, ring):
    """Move a polynomial to an identically-named ring (same variable names)."""
    if p.ring is ring:
        return p
    if p.ring.names != ring.names:
        raise ValueError("variable tables differ")
    return Polynomial(ring, dict(p.terms))


def _exact_divide(p, f, budget=None):
    r, qs = normal_form(p, [f], budget, quotients=True)
    return qs[0], r


def ring_map_kernel(source, target_relations, images, budget=None, constants=()):
    """Kernel of a graded ring map by elimination.

    ``source`` is a list of (name, degree) pairs; ``images`` are homogeneous
    polynomials in the target presentation's ring; ``target_relations`` the
    target's defining relations.  Degree-0 target variables listed in
    ``constants`` (by name) survive into the kernel's ambient ring; all other
    target variables are eliminated.

    Returns (result_ring, kernel_generators).
    """
    if not images:
        raise ValueError("no images")
    tring = images[0].ring
    for img in images:
        if not img.is_homogeneous():
            raise ValueError("inhomogeneous image")
    const_idx = {tring.index[n] for n in constants}
    for i in const_idx:
        if tring.degrees[i] != 0:
            raise ValueError("constants must have degree 0")

    # Combined ring: target blocks stay newest (elimination block for the
    # positive-degree target vars); source vars form one older block; constant
    # blocks remain oldest.  Source vars take their image's target-side degree
    # so the tag relations are homogeneous.
    comb = tring
    for (name, _deg), img in zip(source, images):
        comb = comb.extend(name, img.homogeneous_degree() if not img.is_zero() else 1)
    # extend() puts positive vars newest; rebuild blocks to place source vars
    # below the target's positive blocks.
    src_idx = [comb.index[name] for name, _ in source]
    tgt_pos = [i for i in range(tring.nvars) if tring.degrees[i] > 0]
    consts = [i for i in range(tring.nvars) if tring.degrees[i] == 0]
    blocks = []
    for b in tring.blocks:
        nb = tuple(i for i in b if i in set(tgt_pos))
        if nb:
            blocks.append(nb)
    blocks.append(tuple(src_idx))
    for b in tring.blocks:
        nb = tuple(i for i in b if i in set(consts))
        if nb:
            blocks.append(nb)
    comb = Ring(comb.names, comb.degrees, tuple(blocks))

    gens = [comb.lift(r) for r in target_relations]
    for (name, _deg), img in zip(source, images):
        gens.append(comb.var(name) - comb.lift(img))
    gb = buchberger(gens, track=False, budget=budget)

    eliminate = [i for i in tgt_pos if i not in const_idx] + [i for i in consts if i not in const_idx]
    elim_set = set(eliminate)
    res_ring, keep = comb.drop(eliminate)
    # Rebuild result ring with declared source degrees and a clean block layout.
    names = []
    degrees = []
    for i in keep:
        n = comb.names[i]
        if n in dict(source):
            names.append(n)
            degrees.append(dict(source)[n])
        else:
            names.append(n)
            degrees.append(0)
    result = Ring(tuple(names), tuple(degrees))
    out = []
    for g in gb.basis:
        if g.support_vars() & elim_set:
            continue
        low = comb.project(g, res_ring, keep)
        out.append(Polynomial(result, dict(low.terms)))
    return result, out

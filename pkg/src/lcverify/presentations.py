"""Finitely presented Q-graded rings and root-adjunction tower steps.

A :class:`GradedPresentation` is a variable table with rational degrees, a
homogeneous relation ideal, and a term order.  Root adjunctions add a variable
``y`` with relation ``y^e - f``; branch identifications pin an old variable to
a product of new ones (the computational stand-in for choosing a component of
a normalization) and are validated by reducing the difference of e-th powers
against the prior relations.

Membership in quotient ideals is decided on the *reduced* coordinates, where
every branch-identified variable has been substituted away; this keeps the
Groebner runs small and the adjunction relations' leading terms pure powers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import groebner, linalg
from .ring import Polynomial, Ring

__all__ = [
    "PresentationError",
    "GradedPresentation",
    "TowerStep",
    "MemberResult",
    "AnnihilatorCertificate",
    "present_ring",
    "adjoin_root",
    "quotient_member",
    "load_presentation",
    "dump_presentation",
]


class PresentationError(ValueError):
    pass


@dataclass
class MemberResult:
    """Outcome of a quotient-ideal membership query (in reduced coordinates)."""

    inside: bool
    target: Polynomial
    ideal_gens: list
    relation_gens: list
    certificate: object = None  # full MembershipCertificate over ideal+relations
    witness: Polynomial = None  # nonzero normal form when outside

    @property
    def ideal_cofactors(self):
        if self.certificate is None:
            return None
        return self.certificate.cofactors[: len(self.ideal_gens)]

    @property
    def relation_cofactors(self):
        if self.certificate is None:
            return None
        return self.certificate.cofactors[len(self.ideal_gens):]


@dataclass
class TowerStep:
    parent: "GradedPresentation"
    variable: str
    exponent: int
    radicand: Polynomial
    branches: tuple


@dataclass
class AnnihilatorCertificate:
    """An element u of valuation epsilon with u * numerator in (ideal) + relations."""

    level: "GradedPresentation"
    u: Polynomial
    epsilon: Fraction
    numerator: Polynomial
    ideal_gens: list
    result: MemberResult

    def is_valid(self):
        if not self.result.inside or self.result.certificate is None:
            return False
        if not self.result.certificate.is_valid():
            return False
        return self.level.valuation(self.u) == self.epsilon and self.epsilon > 0


class GradedPresentation:
    def __init__(self, ring, relations, label, branches=(), step=None, check=True, budget_limit=None):
        self.ring = ring
        self.relations = tuple(relations)
        self.label = label
        #: branch identifications: (var_index, replacement polynomial)
        self.branches = tuple(branches)
        self.step = step
        self.budget_limit = budget_limit or groebner.DEFAULT_BUDGET
        self._gb_cache = {}
        self._reduced = None
        if check:
            self._check_homogeneous()
            if self.groebner().is_trivial():
                raise PresentationError(f"trivial ring: presentation {label!r} collapses to (1)")

    # -- construction checks ----------------------------------------------

    def _check_homogeneous(self):
        for rel in self.relations:
            if not rel.is_homogeneous():
                split = {str(d): str(p) for d, p in rel.degree_components().items()}
                raise PresentationError(
                    f"inhomogeneous relation {rel} in {self.label!r}: degree split {split}"
                )

    # -- reduced (branch-free) coordinates ---------------------------------

    def transport(self, f):
        """Substitute every branch-identified variable away from f."""
        f = self.ring.lift(f)
        again = True
        while again:
            again = False
            for i, repl in self.branches:
                if any(exp[i] for exp in f.terms):
                    f = f.substitute(i, repl)
                    again = True
        return f

    def reduced(self):
        """(reduced ring, projector, reduced relations) with branch vars removed."""
        if self._reduced is None:
            gone = [i for i, _ in self.branches]
            rring, keep = self.ring.drop(gone)

            def project(f):
                return self.ring.project(self.transport(f), rring, keep)

            rels = []
            seen = set()
            for rel in self.relations:
                r = project(rel)
                if r.is_zero():
                    continue
                k = r.monic().canonical_key()
                if k in seen:
                    continue
                seen.add(k)
                rels.append(r)
            self._reduced = (rring, project, tuple(rels))
        return self._reduced

    # -- Groebner machinery -------------------------------------------------

    def _gb(self, gens, track):
        key = (tuple(g.canonical_key() for g in gens), track)
        gb = self._gb_cache.get(key)
        if gb is None:
            gb = groebner.buchberger(list(gens), track=track,
                                     budget=groebner.StepBudget(self.budget_limit))
            self._gb_cache[key] = gb
        return gb

    def groebner(self, track=False):
        """Reduced Groebner basis of the (reduced) relation ideal."""
        _, _, rels = self.reduced()
        if not rels:
            rring = self.reduced()[0]
            return groebner.GroebnerBasis([], [rring.zero], [] if track else None, {})
        return self._gb(rels, track)

    def member(self, f, ideal_gens=(), budget=None):
        """Membership of f in (ideal_gens) + relations, with certificate/witness."""
        rring, project, rels = self.reduced()
        fr = project(f)
        gens = [project(g) for g in ideal_gens]
        allgens = list(gens) + list(rels)  # keep zero gens: cofactor indices stay aligned
        if not allgens:
            inside = fr.is_zero()
            return MemberResult(inside, fr, gens, list(rels),
                                certificate=groebner.MembershipCertificate(fr, [], []) if inside else None,
                                witness=None if inside else fr)
        gb = self._gb(tuple(allgens), True)
        inside, payload = gb.member(fr, budget)
        if inside:
            return MemberResult(True, fr, gens, list(rels), certificate=payload)
        return MemberResult(False, fr, gens, list(rels), witness=payload)

    def normal_form(self, f):
        rring, project, rels = self.reduced()
        fr = project(f)
        if not rels:
            return fr
        return self.groebner().normal_form(fr)

    def valuation(self, f):
        """Grading valuation of the canonical representative of f."""
        return self.normal_form(f).valuation()

    # -- constants ----------------------------------------------------------

    def constant_rules(self):
        """Monic rewrite rules (var, exponent, rhs) for degree-0 generators.

        Detected from relations supported on degree-0 variables whose leading
        monomial is a pure power; newest constants first.
        """
        rring, _, rels = self.reduced()
        rules = []
        for rel in rels:
            if any(rring.degrees[i] != 0 for i in rel.support_vars()):
                continue
            lm, lc = rel.leading_term()
            nz = [(i, e) for i, e in enumerate(lm) if e]
            if len(nz) != 1:
                continue
            i, e = nz[0]
            rhs = (rel.scale(1 / lc) - rring.monomial(lm)).scale(-1)
            rules.append((i, e, rhs))
        rules.sort(key=lambda r: -r[0])
        return rules

    def constant_caps(self):
        return {i: e for i, e, _ in self.constant_rules()}

    def oracle_member(self, f, ideal_gens=(), piece_bound=5000):
        """Independent linear-algebra membership check (homogeneous data only)."""
        rring, project, rels = self.reduced()
        rules = self.constant_rules()
        rule_keys = {rring.monomial([e if k == i else 0 for k in range(rring.nvars)]).canonical_key()
                     for i, e, _ in rules}
        graded = []
        for rel in rels:
            if any(rring.degrees[i] != 0 for i in rel.support_vars()) or rel.is_zero():
                graded.append(rel)
                continue
            lm, _ = rel.leading_term()
            pure = rring.monomial(lm).canonical_key()
            if pure in rule_keys:
                continue  # handled by constant reduction
            graded.append(rel)
        gens = [project(g) for g in ideal_gens] + graded
        return linalg.linear_membership(project(f), gens, rules, self.constant_caps(),
                                        piece_bound=piece_bound)

    def __repr__(self):
        return f"GradedPresentation({self.label!r}, vars={self.ring.names})"


def present_ring(names, degrees, relations, label, blocks=None, budget_limit=None):
    """Build and validate a finitely presented Q-graded ring."""
    ring = Ring(tuple(names), tuple(degrees), blocks)
    rels = []
    for rel in relations:
        rels.append(ring.parse(rel) if isinstance(rel, str) else ring.lift(rel))
    return GradedPresentation(ring, rels, label, budget_limit=budget_limit)


def adjoin_root(parent, name, radicand, exponent, branches=(), label=None, check_branches=True):
    """Adjoin a root: new variable y with y^exponent = radicand.

    ``branches`` lists identifications (old_var_name, replacement, power); each
    replacement is parsed/lifted in the extended ring and validated by checking
    that old_var^power - replacement^power lies in the prior relation ideal.
    """
    if not isinstance(exponent, int) or exponent < 2:
        raise PresentationError("root exponent must be an integer >= 2")
    radicand = parent.ring.lift(radicand) if isinstance(radicand, Polynomial) else parent.ring.parse(radicand)
    if not radicand.is_homogeneous():
        raise PresentationError("inhomogeneous radicand")
    deg = radicand.homogeneous_degree() / exponent
    ring = parent.ring.extend(name, deg)
    rels = [ring.lift(r) for r in parent.relations]
    y = ring.var(name)
    rels.append(y ** exponent - ring.lift(radicand))
    new_branches = [(i, ring.lift(repl)) for i, repl in parent.branches]
    label = label or f"{parent.label}[{name}]"

    prior = GradedPresentation(ring, rels, label + ".prior", tuple(new_branches),
                               check=False, budget_limit=parent.budget_limit)
    branch_steps = []
    for old_name, repl, power in branches:
        repl = ring.parse(repl) if isinstance(repl, str) else ring.lift(repl)
        i = ring.index[old_name]
        old = ring.var(old_name)
        if not repl.is_homogeneous() or repl.homogeneous_degree() != ring.degrees[i]:
            raise PresentationError(f"branch identification for {old_name!r} is not degree-matched")
        if check_branches:
            diff = old ** power - repl ** power
            res = prior.member(diff)
            if not res.inside:
                raise PresentationError(
                    f"branch identification {old_name} = {repl} fails its power-{power} check"
                )
        rels.append(old - repl)
        new_branches.append((i, repl))
        branch_steps.append((old_name, repl, power))

    step = TowerStep(parent, name, exponent, radicand, tuple(branch_steps))
    return GradedPresentation(ring, rels, label, tuple(new_branches), step=step,
                              budget_limit=parent.budget_limit)


def quotient_member(presentation, f, ideal_gens, budget=None):
    f = presentation.ring.parse(f) if isinstance(f, str) else presentation.ring.lift(f)
    gens = [presentation.ring.parse(g) if isinstance(g, str) else presentation.ring.lift(g)
            for g in ideal_gens]
    return presentation.member(f, gens, budget)


# -- presentation files ------------------------------------------------------


def dump_presentation(p):
    lines = [f"LABEL {p.label}", "VARS"]
    for n, d in zip(p.ring.names, p.ring.degrees):
        lines.append(f"{n} : {d}")
    lines.append("ORDER")
    for block in p.ring.blocks:
        lines.append(", ".join(p.ring.names[i] for i in block))
    lines.append("RELS")
    for rel in p.relations:
        lines.append(str(rel))
    return "\n".join(lines) + "\n"


def load_presentation(text, label=None, budget_limit=None):
    section = None
    names, degrees, blocks, rels = [], [], [], []
    file_label = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("LABEL"):
            file_label = line[5:].strip()
            continue
        if line in ("VARS", "RELS", "ORDER"):
            section = line
            continue
        if section == "VARS":
            name, _, deg = line.partition(":")
            names.append(name.strip())
            degrees.append(Fraction(deg.strip()))
        elif section == "ORDER":
            blocks.append(tuple(n.strip() for n in line.split(",")))
        elif section == "RELS":
            rels.append(line)
        else:
            raise PresentationError(f"unexpected line outside any section: {line!r}")
    index = {n: i for i, n in enumerate(names)}
    block_idx = tuple(tuple(index[n] for n in b) for b in blocks) if blocks else None
    return present_ring(names, degrees, rels, label or file_label or "unlabeled",
                        blocks=block_idx, budget_limit=budget_limit)

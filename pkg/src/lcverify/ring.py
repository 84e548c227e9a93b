"""Sparse multivariate polynomials over Q with rational gradings and block term orders.

Everything is exact: coefficients are `fractions.Fraction`, degrees are
Fraction-valued (degree-0 "constant" generators are allowed), and monomials are
compared under a weighted block order.  Values are immutable after construction
and safe to share between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm

__all__ = [
    "INFINITY",
    "AmbientMismatch",
    "ParseError",
    "MonomialOrder",
    "Ring",
    "Polynomial",
]

#: Valuation of the zero polynomial.  Compares and adds correctly against
#: Fraction degrees, which is all we need from the distinguished symbol.
INFINITY = float("inf")


class AmbientMismatch(ValueError):
    """Raised when polynomials from different ambient rings are combined."""


class ParseError(ValueError):
    pass


class MonomialOrder:
    """Weighted block order: blocks newest-first, graded-revlex inside a block.

    Within a block, monomials are compared by integer-weighted degree (the
    rational variable degrees scaled by the common denominator), then by total
    degree (which separates powers of weight-0 constants), then reverse
    lexicographically.  The composite is a multiplication-compatible total
    order with 1 as the least monomial.
    """

    TIE_BREAK = "grevlex"

    def __init__(self, weights, blocks):
        self.weights = tuple(weights)
        self.blocks = tuple(tuple(b) for b in blocks)

    def key(self, expvec):
        w = self.weights
        key = []
        for block in self.blocks:
            wd = 0
            td = 0
            for i in block:
                e = expvec[i]
                wd += e * w[i]
                td += e
            key.append(wd)
            key.append(td)
            key.append(tuple(-expvec[i] for i in reversed(block)))
        return tuple(key)

    def nkey(self, expvec):
        """Elementwise negation of key(); sorts ascending where key sorts descending."""
        w = self.weights
        key = []
        for block in self.blocks:
            wd = 0
            td = 0
            for i in block:
                e = expvec[i]
                wd += e * w[i]
                td += e
            key.append(-wd)
            key.append(-td)
            key.append(tuple(expvec[i] for i in reversed(block)))
        return tuple(key)


def _weights_for(degrees):
    denoms = [d.denominator for d in degrees if d > 0]
    scale = lcm(*denoms) if denoms else 1
    ws = []
    for d in degrees:
        w = d * scale
        assert w.denominator == 1
        ws.append(int(w))
    return tuple(ws), scale


class Ring:
    """Ambient variable table: names, rational degrees, order blocks.

    ``blocks`` lists variable-index blocks newest-first; weight-0 constants
    always sit in blocks older than every positive-degree block so that leading
    terms avoid them whenever possible.
    """

    def __init__(self, names, degrees, blocks=None):
        names = tuple(names)
        degrees = tuple(Fraction(d) for d in degrees)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if len(names) != len(degrees):
            raise ValueError("names/degrees length mismatch")
        if any(d < 0 for d in degrees):
            raise ValueError("negative variable degree")
        if blocks is None:
            graded = tuple(i for i, d in enumerate(degrees) if d > 0)
            consts = [(i,) for i, d in enumerate(degrees) if d == 0]
            blocks = ([graded] if graded else []) + consts
        blocks = tuple(tuple(b) for b in blocks)
        covered = sorted(i for b in blocks for i in b)
        if covered != list(range(len(names))):
            raise ValueError("blocks must partition the variables")
        self.names = names
        self.degrees = degrees
        self.blocks = blocks
        self.weights, self.weight_scale = _weights_for(degrees)
        self.order = MonomialOrder(self.weights, blocks)
        self.index = {n: i for i, n in enumerate(names)}
        self.nvars = len(names)
        self.signature = (names, degrees, blocks)
        self._zero_exp = (0,) * self.nvars
        self._key_cache = {}
        self._nkey_cache = {}
        self.zero = Polynomial(self, {})
        self.one = Polynomial(self, {self._zero_exp: Fraction(1)})

    def key_of(self, exp):
        """Memoized order key (exponent tuples recur heavily in reductions)."""
        k = self._key_cache.get(exp)
        if k is None:
            k = self._key_cache[exp] = self.order.key(exp)
        return k

    def nkey_of(self, exp):
        k = self._nkey_cache.get(exp)
        if k is None:
            k = self._nkey_cache[exp] = self.order.nkey(exp)
        return k

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def __eq__(self, other):
        return isinstance(other, Ring) and self.signature == other.signature

    def __hash__(self):
        return hash(self.signature)

    # -- constructors ------------------------------------------------------

    def var(self, name):
        i = self.index[name]
        exp = list(self._zero_exp)
        exp[i] = 1
        return Polynomial(self, {tuple(exp): Fraction(1)})

    def gens(self):
        return [self.var(n) for n in self.names]

    def const(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero
        return Polynomial(self, {self._zero_exp: c})

    def monomial(self, expvec, coeff=1):
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero
        return Polynomial(self, {tuple(expvec): coeff})

    def from_terms(self, terms):
        clean = {}
        for exp, c in terms.items() if isinstance(terms, dict) else terms:
            c = Fraction(c)
            if c == 0:
                continue
            exp = tuple(exp)
            c0 = clean.get(exp)
            if c0 is None:
                clean[exp] = c
            else:
                c = c0 + c
                if c == 0:
                    del clean[exp]
                else:
                    clean[exp] = c
        return Polynomial(self, clean)

    # -- ring extension ----------------------------------------------------

    def extend(self, name, degree):
        """New ring with one extra variable.

        A positive-degree variable opens a fresh newest block; a degree-0
        constant opens a fresh block placed after all positive-degree blocks
        but before previously present constant blocks (so newer constants
        dominate older ones).
        """
        degree = Fraction(degree)
        if name in self.index:
            raise ValueError(f"variable {name!r} already present")
        idx = self.nvars
        if degree > 0:
            blocks = ((idx,),) + self.blocks
        else:
            pos = len(self.blocks)
            for k, b in enumerate(self.blocks):
                if all(self.degrees[i] == 0 for i in b):
                    pos = k
                    break
            blocks = self.blocks[:pos] + ((idx,),) + self.blocks[pos:]
        return Ring(self.names + (name,), self.degrees + (degree,), blocks)

    def lift(self, poly):
        """Reinterpret a polynomial of a prefix ring in this ring."""
        if poly.ring is self or poly.ring.signature == self.signature:
            return poly
        if poly.ring.names != self.names[: poly.ring.nvars]:
            raise AmbientMismatch("ambient mismatch")
        pad = (0,) * (self.nvars - poly.ring.nvars)
        return Polynomial(self, {exp + pad: c for exp, c in poly.terms.items()})

    def drop(self, indices):
        """Remove variables (returns the smaller ring and an index map)."""
        gone = set(indices)
        keep = [i for i in range(self.nvars) if i not in gone]
        pos = {i: k for k, i in enumerate(keep)}
        blocks = []
        for b in self.blocks:
            nb = tuple(pos[i] for i in b if i in pos)
            if nb:
                blocks.append(nb)
        ring = Ring(
            tuple(self.names[i] for i in keep),
            tuple(self.degrees[i] for i in keep),
            tuple(blocks),
        )
        return ring, keep

    def project(self, poly, ring, keep):
        """Map a polynomial with zero exponents on dropped vars into ``ring``."""
        terms = {}
        for exp, c in poly.terms.items():
            nexp = tuple(exp[i] for i in keep)
            if sum(exp) != sum(nexp):
                raise ValueError("polynomial involves a dropped variable")
            terms[nexp] = c
        return Polynomial(ring, terms)

    # -- parsing -----------------------------------------------------------

    _TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()^*+-]|/))")

    def parse(self, text):
        """Parse the textual grammar: ints, rationals p/q, vars, + - * ^, parens."""
        tokens = []
        pos = 0
        n = len(text)
        while pos < n:
            if text[pos].isspace():
                pos += 1
                continue
            m = self._TOKEN.match(text, pos)
            if not m or m.lastindex is None:
                raise ParseError(f"bad token at {text[pos:pos + 10]!r}")
            tokens.append(m.group(m.lastindex))
            pos = m.end()
        self._toks = tokens
        self._tpos = 0
        result = self._parse_sum()
        if self._tpos != len(tokens):
            raise ParseError(f"trailing input near {tokens[self._tpos]!r}")
        del self._toks, self._tpos
        return result

    def _peek(self):
        return self._toks[self._tpos] if self._tpos < len(self._toks) else None

    def _next(self):
        tok = self._peek()
        self._tpos += 1
        return tok

    def _parse_sum(self):
        sign = 1
        while self._peek() in ("+", "-"):
            if self._next() == "-":
                sign = -sign
        acc = self._parse_product() * sign
        while self._peek() in ("+", "-"):
            sign = 1
            while self._peek() in ("+", "-"):
                if self._next() == "-":
                    sign = -sign
            acc = acc + self._parse_product() * sign
        return acc

    def _parse_product(self):
        acc = self._parse_power()
        while self._peek() == "*":
            self._next()
            acc = acc * self._parse_power()
        return acc

    def _parse_power(self):
        base = self._parse_atom()
        if self._peek() == "^":
            self._next()
            tok = self._next()
            if tok is None or not tok.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            base = base ** int(tok)
        return base

    def _parse_atom(self):
        tok = self._next()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok == "(":
            inner = self._parse_sum()
            if self._next() != ")":
                raise ParseError("missing closing parenthesis")
            return inner
        if tok == "-":
            return -self._parse_atom()
        if tok.isdigit():
            num = int(tok)
            if self._peek() == "/" and self._tpos + 1 < len(self._toks) and self._toks[self._tpos + 1].isdigit():
                self._next()
                den = int(self._next())
                return self.const(Fraction(num, den))
            return self.const(num)
        if tok in self.index:
            return self.var(tok)
        raise ParseError(f"unknown variable {tok!r}")


def _fmt_coeff(c):
    return str(c)


class Polynomial:
    """Immutable sparse polynomial: map exponent-vector -> nonzero Fraction."""

    __slots__ = ("ring", "terms", "_key", "_hash", "_sorted")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._key = None
        self._hash = None
        self._sorted = None

    # -- basics ------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring.signature != self.ring.signature:
                raise AmbientMismatch("ambient mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def canonical_key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, self.canonical_key()))
        return self._hash

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.signature == other.ring.signature and self.terms == other.terms

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        big, small = (self.terms, other.terms)
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for exp, c in small.items():
            c0 = out.get(exp)
            if c0 is None:
                out[exp] = c
            else:
                s = c0 + c
                if s == 0:
                    del out[exp]
                else:
                    out[exp] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                c0 = out.get(exp)
                if c0 is None:
                    out[exp] = c
                else:
                    s = c0 + c
                    if s == 0:
                        del out[exp]
                    else:
                        out[exp] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return self.ring.zero
        return Polynomial(self.ring, {e: cc * c for e, cc in self.terms.items()})

    # -- order-dependent views --------------------------------------------

    def sorted_terms(self):
        """Terms in descending monomial order (canonical printing order)."""
        if self._sorted is None:
            key = self.ring.key_of
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coeff(self):
        return self.leading_term()[1]

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coeff())

    # -- grading -----------------------------------------------------------

    def monomial_degree(self, exp):
        degs = self.ring.degrees
        return sum((degs[i] * e for i, e in enumerate(exp) if e), Fraction(0))

    def degree_components(self):
        """Split into homogeneous components: map degree -> polynomial."""
        buckets = {}
        for exp, c in self.terms.items():
            buckets.setdefault(self.monomial_degree(exp), {})[exp] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(buckets.items())}

    def valuation(self):
        """Least degree with a nonzero component; INFINITY for 0."""
        if not self.terms:
            return INFINITY
        return min(self.monomial_degree(exp) for exp in self.terms)

    def is_homogeneous(self):
        degs = {self.monomial_degree(exp) for exp in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        degs = {self.monomial_degree(exp) for exp in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    # -- substitution ------------------------------------------------------

    def substitute(self, var_index, value):
        """Exact substitution of one variable by a polynomial."""
        value = self._check(value)
        out = self.ring.zero
        powers = {0: self.ring.one}
        for exp, c in self.terms.items():
            e = exp[var_index]
            if e not in powers:
                powers[e] = value ** e
            rest = list(exp)
            rest[var_index] = 0
            out = out + self.ring.monomial(rest, c) * powers[e]
        return out

    def support_vars(self):
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(i)
        return used

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        chunks = []
        for exp, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                body = _fmt_coeff(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fmt_coeff(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"<{self}>"

"""S-expression syntax for Hom-algebra terms and identities.

    term     := VAR
              | (mul term term)          product
              | (a K term)               alpha applied K times, K >= 0
              | (as term term term)      Hom-associator
              | (com term term)          commutator
              | (add term term ...)      sum
              | (sub term term)          difference
              | (neg term)               negation
              | (scale P/Q term)         scalar multiple
    identity := (= term term)

Variables are identifiers ([A-Za-z_][A-Za-z0-9_]*).  parse_term returns
a HomPolynomial (terms normalize on construction); parse_identity
returns the (lhs, rhs) pair; parse_monomial additionally insists the
term is a single monomial with coefficient 1, which is what certificate
substitutions and wraps require.  Malformed input raises ValueError
with the offending position.
"""

import re

from .linalg import parse_scalar
from .symbolic import (
    HomMonomial,
    expand_associator,
    poly_commutator,
    poly_mul,
    var,
)

__all__ = ["parse_term", "parse_identity", "parse_monomial", "term_to_dsl"]

_VAR_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INT_RE = re.compile(r"^\d+$")


def _tokenize(s):
    toks = []
    i = 0
    n = len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()":
            toks.append((ch, i))
            i += 1
            continue
        j = i
        while j < n and not s[j].isspace() and s[j] not in "()":
            j += 1
        toks.append((s[i:j], i))
        i = j
    return toks


class _Parser:
    def __init__(self, s):
        self.text = s
        self.toks = _tokenize(s)
        self.pos = 0

    def error(self, msg, at=None):
        where = self.toks[at][1] if at is not None and at < len(self.toks) else len(self.text)
        raise ValueError("%s (at position %d)" % (msg, where))

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def next(self):
        if self.pos >= len(self.toks):
            self.error("unexpected end of input")
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, what):
        tok, _ = self.next()
        if tok != what:
            self.error("expected %r, got %r" % (what, tok), self.pos - 1)

    def parse_term(self):
        tok, _ = self.next()
        if tok == ")":
            self.error("unexpected ')'", self.pos - 1)
        if tok != "(":
            if not _VAR_RE.match(tok):
                self.error("bad variable name %r" % tok, self.pos - 1)
            return var(tok)
        head, _ = self.next()
        if head == "mul":
            p = self.parse_term()
            q = self.parse_term()
            self.expect(")")
            return poly_mul(p, q)
        if head == "a":
            ktok, _ = self.next()
            if not _INT_RE.match(ktok):
                self.error("alpha power must be a non-negative integer, got %r" % ktok,
                           self.pos - 1)
            p = self.parse_term()
            self.expect(")")
            return p.alpha(int(ktok))
        if head == "as":
            p = self.parse_term()
            q = self.parse_term()
            r = self.parse_term()
            self.expect(")")
            return expand_associator(p, q, r)
        if head == "com":
            p = self.parse_term()
            q = self.parse_term()
            self.expect(")")
            return poly_commutator(p, q)
        if head == "add":
            total = self.parse_term()
            while self.peek() != ")":
                total = total + self.parse_term()
            self.expect(")")
            return total
        if head == "sub":
            p = self.parse_term()
            q = self.parse_term()
            self.expect(")")
            return p - q
        if head == "neg":
            p = self.parse_term()
            self.expect(")")
            return -p
        if head == "scale":
            ctok, _ = self.next()
            try:
                c = parse_scalar(ctok)
            except ValueError:
                self.error("bad scalar literal %r" % ctok, self.pos - 1)
            p = self.parse_term()
            self.expect(")")
            return p.scale(c)
        self.error("unknown operator %r" % head, self.pos - 1)

    def done(self):
        if self.pos != len(self.toks):
            self.error("trailing input", self.pos)


def parse_term(s):
    """Parse a term into a HomPolynomial."""
    p = _Parser(s)
    out = p.parse_term()
    p.done()
    return out


def parse_identity(s):
    """Parse (= lhs rhs) into a pair of HomPolynomials."""
    p = _Parser(s)
    p.expect("(")
    tok, _ = p.next()
    if tok != "=":
        p.error("identities must start with (=, got %r" % tok, p.pos - 1)
    lhs = p.parse_term()
    rhs = p.parse_term()
    p.expect(")")
    p.done()
    return lhs, rhs


def parse_monomial(s):
    """Parse a term that must be a single monomial with coefficient 1."""
    poly = parse_term(s)
    terms = poly.terms()
    if len(terms) != 1 or terms[0][1] != 1:
        raise ValueError("expected a single monomial with coefficient 1: %r" % s)
    return terms[0][0]


def term_to_dsl(m):
    """Serialize a HomMonomial (or its tree) back to DSL syntax."""
    tree = m.tree if isinstance(m, HomMonomial) else m

    def go(t):
        if t[0] == "v":
            return t[1] if t[2] == 0 else "(a %d %s)" % (t[2], t[1])
        return "(mul %s %s)" % (go(t[1]), go(t[2]))

    return go(tree)

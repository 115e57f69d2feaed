"""The free multiplicative Hom-algebra and proof certificates.

Monomials are binary product trees whose leaves are pairs (variable,
alpha-exponent); multiplicativity alpha(m*n) = alpha(m)*alpha(n) is
built into the normal form, which pushes every alpha down to the
leaves.  A polynomial is a finite Scalar combination of normalized
monomials.  Equality of normal forms therefore decides equality of
expressions in every multiplicative Hom-algebra -- that is the
soundness bridge the certificate layer stands on.

A certificate for an identity lhs = rhs is a list of instances

    coeff * wrap( axiom[ substitution ] )

where the axiom is the linearized right-alternative defect

    RA(x, y, z) = as(x, y, z) + as(x, z, y),

the (identically vanishing) Hom-Teichmuller combination, or the defect
lhs - rhs of an identity certified earlier, the substitution plugs
monomials into the axiom's formal variables, and wrap is a chain of
left/right multiplications by monomials and alpha shifts.  The
certificate verifies when the identity's defect minus the sum of
instances normalizes to zero; since each instance vanishes in every
multiplicative right Hom-alternative algebra, the identity then holds
in all of them.  The shipped certificates live in data/certificates.json
and use only instances that are individually nonzero, so corrupting any
single coefficient breaks verification.

Identities are also checkable concretely: check_identity_on_algebra
multilinearizes the defect symbolically (replacing a degree-d variable
by d slots and keeping the terms where each slot occurs once -- over Q
the multilinear form vanishes iff the identity does) and then sweeps
all basis assignments of the slots, exactly.
"""

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations_with_replacement, permutations, product

from .linalg import ONE, ZERO, as_scalar, format_scalar, parse_scalar
from .core import CheckReport, apply_alpha, is_multiplicative, mul

__all__ = [
    "HomMonomial",
    "HomPolynomial",
    "var",
    "mono",
    "alpha_poly",
    "poly_mul",
    "expand_associator",
    "poly_commutator",
    "ra_polynomial",
    "specialize_classical",
    "normalize_raw",
    "raw_redexes",
    "rewrite_at",
    "normalize_random",
    "evaluate_raw",
    "evaluate_polynomial",
    "IdentityDef",
    "identity_registry",
    "identity_defect",
    "check_identity_on_algebra",
    "hom_teichmuller_terms",
    "teichmuller_f",
    "verify_hom_teichmuller",
    "subst_monomial",
    "subst_poly",
    "build_instance",
    "load_certificates",
    "verify_certificate",
    "verify_all_certificates",
]


# -- monomials ---------------------------------------------------------------
#
# normalized trees:  ("v", name, k)  |  ("m", left, right)
# raw trees may also contain ("a", subtree) nodes.


def _shift_tree(tree, k):
    if tree[0] == "v":
        return ("v", tree[1], tree[2] + k)
    return ("m", _shift_tree(tree[1], k), _shift_tree(tree[2], k))


def _tree_leaves(tree, out):
    if tree[0] == "v":
        out.append((tree[1], tree[2]))
    else:
        _tree_leaves(tree[1], out)
        _tree_leaves(tree[2], out)


def _tree_shape(tree):
    return "." if tree[0] == "v" else "(%s%s)" % (_tree_shape(tree[1]), _tree_shape(tree[2]))


def _tree_repr(tree):
    if tree[0] == "v":
        return tree[1] if tree[2] == 0 else "a%d(%s)" % (tree[2], tree[1])
    return "(%s*%s)" % (_tree_repr(tree[1]), _tree_repr(tree[2]))


class HomMonomial:
    """A normalized monomial: product tree with alpha pushed to leaves.

    Ordered by (leaf count, tree shape, leaf names, leaf exponents),
    which makes polynomial term order -- and hence serialized output --
    canonical.
    """

    __slots__ = ("tree", "_key")

    def __init__(self, tree):
        assert tree[0] in ("v", "m")
        self.tree = tree
        leaves = []
        _tree_leaves(tree, leaves)
        self._key = (
            len(leaves),
            _tree_shape(tree),
            tuple(n for n, _ in leaves),
            tuple(k for _, k in leaves),
        )

    @staticmethod
    def variable(name, k=0):
        assert k >= 0
        return HomMonomial(("v", str(name), k))

    def mul(self, other):
        return HomMonomial(("m", self.tree, other.tree))

    def alpha(self, k=1):
        if k < 0:
            raise ValueError("alpha shifts must be non-negative, got %d" % k)
        return self if k == 0 else HomMonomial(_shift_tree(self.tree, k))

    def leaves(self):
        out = []
        _tree_leaves(self.tree, out)
        return out

    def degree_of(self, name):
        return sum(1 for n, _ in self.leaves() if n == name)

    def size(self):
        return self._key[0]

    def __eq__(self, other):
        return isinstance(other, HomMonomial) and other.tree == self.tree

    def __hash__(self):
        return hash(self.tree)

    def __lt__(self, other):
        return self._key < other._key

    def __repr__(self):
        return _tree_repr(self.tree)


def mono(name, k=0):
    return HomMonomial.variable(name, k)


class HomPolynomial:
    """Scalar combination of HomMonomials; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                c = as_scalar(c)
                if c == 0:
                    continue
                acc = self._terms.get(m, ZERO) + c
                if acc == 0:
                    self._terms.pop(m, None)
                else:
                    self._terms[m] = acc

    @staticmethod
    def zero():
        return HomPolynomial()

    def terms(self):
        """Sorted list of (monomial, coefficient)."""
        return sorted(self._terms.items(), key=lambda mc: mc[0]._key)

    def num_terms(self):
        return len(self._terms)

    def coefficient(self, m):
        return self._terms.get(m, ZERO)

    def is_zero(self):
        return not self._terms

    def __add__(self, other):
        out = dict(self._terms)
        for m, c in other._terms.items():
            acc = out.get(m, ZERO) + c
            if acc == 0:
                out.pop(m, None)
            else:
                out[m] = acc
        p = HomPolynomial()
        p._terms = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = HomPolynomial()
        p._terms = {m: -c for m, c in self._terms.items()}
        return p

    def scale(self, c):
        c = as_scalar(c)
        p = HomPolynomial()
        if c != 0:
            p._terms = {m: c * x for m, x in self._terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, HomPolynomial):
            return poly_mul(self, other)
        return NotImplemented

    def alpha(self, k=1):
        p = HomPolynomial()
        p._terms = {m.alpha(k): c for m, c in self._terms.items()}
        return p

    def variables(self):
        vs = set()
        for m in self._terms:
            vs.update(n for n, _ in m.leaves())
        return vs

    def __eq__(self, other):
        return isinstance(other, HomPolynomial) and other._terms == self._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        bits = []
        for m, c in self.terms():
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            body = repr(m) if mag == 1 else "%s*%s" % (format_scalar(mag), m)
            bits.append("%s %s" % (sign, body))
        out = " ".join(bits)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def var(name, k=0):
    return HomPolynomial({mono(name, k): ONE})


def poly_mul(p, q):
    out = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = m1.mul(m2)
            acc = out.get(m, ZERO) + c1 * c2
            if acc == 0:
                out.pop(m, None)
            else:
                out[m] = acc
    r = HomPolynomial()
    r._terms = out
    return r


def alpha_poly(p, k=1):
    return p.alpha(k)


def expand_associator(p, q, r):
    """as(p, q, r) = (p*q)*alpha(r) - alpha(p)*(q*r)."""
    return poly_mul(poly_mul(p, q), r.alpha(1)) - poly_mul(p.alpha(1), poly_mul(q, r))


def poly_commutator(p, q):
    return poly_mul(p, q) - poly_mul(q, p)


def ra_polynomial():
    """RA(x,y,z) = as(x,y,z) + as(x,z,y), the linearized right-alternative law."""
    x, y, z = var("x"), var("y"), var("z")
    return expand_associator(x, y, z) + expand_associator(x, z, y)


def specialize_classical(p):
    """Set every alpha-exponent to zero (the alpha = Id specialization)."""
    def strip(tree):
        if tree[0] == "v":
            return ("v", tree[1], 0)
        return ("m", strip(tree[1]), strip(tree[2]))

    out = {}
    for m, c in p._terms.items():
        m2 = HomMonomial(strip(m.tree))
        out[m2] = out.get(m2, ZERO) + c
    return HomPolynomial(out)


# -- raw (un-normalized) trees ----------------------------------------------


def normalize_raw(tree):
    """Push alphas to the leaves; returns the normalized tree."""

    def go(t, pending):
        if t[0] == "a":
            return go(t[1], pending + 1)
        if t[0] == "v":
            return ("v", t[1], t[2] + pending)
        return ("m", go(t[1], pending), go(t[2], pending))

    return go(tree, 0)


def raw_redexes(tree, path=()):
    """Paths of all rewritable positions: ("a", X) with X a leaf or product."""
    out = []
    if tree[0] == "a":
        if tree[1][0] in ("v", "m"):
            out.append(path)
        out.extend(raw_redexes(tree[1], path + (1,)))
    elif tree[0] == "m":
        out.extend(raw_redexes(tree[1], path + (1,)))
        out.extend(raw_redexes(tree[2], path + (2,)))
    return out


def rewrite_at(tree, path):
    """One rewrite step: a(leaf) absorbs, a(m*n) -> a(m)*a(n)."""
    if path:
        parts = list(tree)
        parts[path[0]] = rewrite_at(tree[path[0]], path[1:])
        return tuple(parts)
    assert tree[0] == "a" and tree[1][0] in ("v", "m")
    inner = tree[1]
    if inner[0] == "v":
        return ("v", inner[1], inner[2] + 1)
    return ("m", ("a", inner[1]), ("a", inner[2]))


def normalize_random(tree, rng):
    """Normalize by repeatedly firing a randomly chosen redex."""
    while True:
        redexes = raw_redexes(tree)
        if not redexes:
            return tree
        tree = rewrite_at(tree, rng.choice(redexes))


def evaluate_raw(A, tree, assignment):
    """Structural evaluation of a raw tree (the evaluation oracle)."""
    if tree[0] == "v":
        name, k = tree[1], tree[2]
        if name not in assignment:
            raise ValueError("unassigned variable %r" % name)
        e = assignment[name]
        for _ in range(k):
            e = apply_alpha(A, e)
        return e
    if tree[0] == "a":
        return apply_alpha(A, evaluate_raw(A, tree[1], assignment))
    return mul(A, evaluate_raw(A, tree[1], assignment), evaluate_raw(A, tree[2], assignment))


# -- evaluation of normalized polynomials ------------------------------------


def _require_multiplicative(A, who):
    rep = is_multiplicative(A)
    if not rep.passed:
        raise ValueError(
            "%s needs a multiplicative algebra (free monomials assume "
            "alpha(x*y) = alpha(x)*alpha(y)); witness %r" % (who, rep.witness)
        )


def _eval_tree(A, tree, assignment, memo):
    got = memo.get(tree)
    if got is not None:
        return got
    if tree[0] == "v":
        name, k = tree[1], tree[2]
        if name not in assignment:
            raise ValueError("unassigned variable %r" % name)
        e = assignment[name]
        for _ in range(k):
            e = apply_alpha(A, e)
    else:
        e = mul(A, _eval_tree(A, tree[1], assignment, memo),
                _eval_tree(A, tree[2], assignment, memo))
    memo[tree] = e
    return e


def evaluate_polynomial(A, p, assignment):
    """Evaluate p in A under {variable: Element}.

    A must be multiplicative (ValueError otherwise: the normal form
    assumed it); unassigned variables are a ValueError too.
    """
    _require_multiplicative(A, "polynomial evaluation")
    memo = {}
    acc = A.zero()
    for m, c in p._terms.items():
        acc = acc + _eval_tree(A, m.tree, assignment, memo).scale(c)
    return acc


# -- the identity registry ---------------------------------------------------


@dataclass(frozen=True)
class IdentityDef:
    """A named identity lhs = rhs with declared variable multidegrees."""

    name: str
    variables: tuple
    degrees: dict
    lhs: HomPolynomial
    rhs: HomPolynomial

    def defect(self):
        return self.lhs - self.rhs


_REGISTRY = None


def identity_registry():
    """The six associator identities of multiplicative right Hom-alternative
    algebras, in certificate dependency order."""
    global _REGISTRY
    if _REGISTRY is not None:
        return _REGISTRY
    w, x, y, z = var("w"), var("x"), var("y"), var("z")
    A = expand_associator

    def a(p, k=1):
        return p.alpha(k)

    reg = {}
    reg["assoc-shift"] = IdentityDef(
        "assoc-shift",
        ("x", "y", "z"),
        {"x": 1, "y": 2, "z": 1},
        A(a(x), a(y), poly_mul(y, z)),
        poly_mul(A(x, y, z), a(y, 2)),
    )
    reg["assoc-shift-linear"] = IdentityDef(
        "assoc-shift-linear",
        ("x", "w", "y", "z"),
        {"x": 1, "w": 1, "y": 1, "z": 1},
        A(a(x), a(w), poly_mul(y, z)) + A(a(x), a(y), poly_mul(w, z)),
        poly_mul(A(x, w, z), a(y, 2)) + poly_mul(A(x, y, z), a(w, 2)),
    )
    reg["commutator-exchange"] = IdentityDef(
        "commutator-exchange",
        ("w", "x", "y", "z"),
        {"w": 1, "x": 1, "y": 1, "z": 1},
        A(poly_mul(w, x), a(y), a(z)) + A(a(w), a(x), poly_commutator(y, z)),
        poly_mul(a(w, 2), A(x, y, z)) + poly_mul(A(w, y, z), a(x, 2)),
    )
    reg["middle-square"] = IdentityDef(
        "middle-square",
        ("x", "y", "z"),
        {"x": 1, "y": 2, "z": 1},
        A(a(x), poly_mul(y, y), a(z)),
        A(a(x), a(y), poly_mul(y, z) + poly_mul(z, y)),
    )
    reg["right-moufang"] = IdentityDef(
        "right-moufang",
        ("x", "y", "z"),
        {"x": 1, "y": 2, "z": 1},
        poly_mul(poly_mul(poly_mul(x, y), a(z)), a(y, 2)),
        poly_mul(a(x, 2), poly_mul(poly_mul(y, z), a(y))),
    )
    reg["associator-tail"] = IdentityDef(
        "associator-tail",
        ("x", "y", "z"),
        {"x": 1, "y": 2, "z": 2},
        poly_mul(poly_mul(A(x, y, z), a(y, 2)), a(z, 3)),
        a(poly_mul(A(x, y, z), a(poly_mul(z, y)))),
    )
    _REGISTRY = reg
    return reg


def identity_defect(name):
    reg = identity_registry()
    if name not in reg:
        raise ValueError("unknown identity %r (have: %s)" % (name, ", ".join(reg)))
    return reg[name].defect()


# -- Hom-Teichmuller ----------------------------------------------------------


def hom_teichmuller_terms(w, x, y, z):
    """The five signed associator terms of f(w, x, y, z)."""
    A = expand_associator
    return [
        A(poly_mul(w, x), y.alpha(1), z.alpha(1)),
        -A(w.alpha(1), poly_mul(x, y), z.alpha(1)),
        A(w.alpha(1), x.alpha(1), poly_mul(y, z)),
        -poly_mul(w.alpha(2), A(x, y, z)),
        -poly_mul(A(w, x, y), z.alpha(2)),
    ]


def teichmuller_f(w, x, y, z):
    """f(w,x,y,z); normalizes to zero in the free multiplicative algebra."""
    total = HomPolynomial.zero()
    for t in hom_teichmuller_terms(w, x, y, z):
        total = total + t
    return total


def verify_hom_teichmuller():
    """True iff f expands to exactly 10 product terms that sum to zero."""
    terms = hom_teichmuller_terms(var("w"), var("x"), var("y"), var("z"))
    before_cancel = sum(t.num_terms() for t in terms)
    total = HomPolynomial.zero()
    for t in terms:
        total = total + t
    return before_cancel == 10 and total.is_zero()


# -- multilinearization and concrete identity checking ------------------------


def _replace_leaves_in_order(tree, names):
    """Rebuild tree with the i-th matching leaf renamed to names[i]."""
    it = iter(names)

    def go(t):
        if t[0] == "v":
            nxt = next(it)
            return ("v", nxt, t[2]) if nxt is not None else t
        return ("m", go(t[1]), go(t[2]))

    return go(tree)


def _polarize_variable(p, v, slots):
    d = len(slots)
    out = {}
    for m, c in p._terms.items():
        leaves = m.leaves()
        hit = [i for i, (n, _) in enumerate(leaves) if n == v]
        assert len(hit) == d
        for perm in permutations(slots):
            names = [None] * len(leaves)
            for t, i in enumerate(hit):
                names[i] = perm[t]
            m2 = HomMonomial(_replace_leaves_in_order(m.tree, names))
            acc = out.get(m2, ZERO) + c
            if acc == 0:
                out.pop(m2, None)
            else:
                out[m2] = acc
    q = HomPolynomial()
    q._terms = out
    return q


def multilinearize(p, degrees):
    """Replace each degree-d variable by d slot variables v#0..v#d-1.

    Returns (multilinear polynomial, {variable: [slot names]}).  Over Q
    the result vanishes identically iff p does on all substitutions.
    """
    groups = {}
    q = p
    for v in sorted(degrees):
        d = degrees[v]
        if d == 1:
            groups[v] = [v]
            continue
        slots = ["%s#%d" % (v, t) for t in range(d)]
        groups[v] = slots
        q = _polarize_variable(q, v, slots)
    return q, groups


def _check_homogeneous(p, degrees, side):
    for m, _ in p._terms.items():
        got = {}
        for n, _k in m.leaves():
            got[n] = got.get(n, 0) + 1
        if got != {v: d for v, d in degrees.items()}:
            raise ValueError(
                "%s is not homogeneous of multidegree %r: monomial %r has %r"
                % (side, degrees, m, got)
            )


def check_identity_on_algebra(A, lhs, rhs, degrees, name="identity"):
    """Exact proof that lhs = rhs holds throughout A.

    Both sides must be homogeneous of the given multidegrees
    (ValueError otherwise); the defect is multilinearized symbolically
    and swept over all basis assignments, with slot symmetry cutting
    each degree-d group to multisets.  A must be multiplicative.
    """
    _require_multiplicative(A, "identity check")
    _check_homogeneous(lhs, degrees, "lhs")
    _check_homogeneous(rhs, degrees, "rhs")
    defect, groups = multilinearize(lhs - rhs, degrees)
    if defect.is_zero():
        return CheckReport(True, name, note="defect normalizes to zero symbolically")
    term_list = defect.terms()
    group_vars = sorted(groups)
    dim = A.dim

    # alpha-powers of basis elements, shared across the whole sweep
    basis_alpha = {}

    def basis_power(idx, k):
        e = basis_alpha.get((idx, k))
        if e is None:
            e = A.basis_element(idx) if k == 0 else apply_alpha(A, basis_power(idx, k - 1))
            basis_alpha[(idx, k)] = e
        return e

    varcache = {}

    def tree_vars(tree):
        got = varcache.get(tree)
        if got is None:
            if tree[0] == "v":
                got = (tree[1],)
            else:
                got = tuple(sorted(set(tree_vars(tree[1])) | set(tree_vars(tree[2]))))
            varcache[tree] = got
        return got

    memo = {}

    def eval_tree(tree, env):
        key = (tree, tuple(env[v] for v in tree_vars(tree)))
        got = memo.get(key)
        if got is not None:
            return got
        if tree[0] == "v":
            e = basis_power(env[tree[1]], tree[2])
        else:
            e = mul(A, eval_tree(tree[1], env), eval_tree(tree[2], env))
        memo[key] = e
        return e

    for combo in product(
        *(combinations_with_replacement(range(dim), len(groups[v])) for v in group_vars)
    ):
        env = {}
        for v, assignment in zip(group_vars, combo):
            for slot, idx in zip(groups[v], assignment):
                env[slot] = idx
        acc = A.zero()
        for m, c in term_list:
            acc = acc + eval_tree(m.tree, env).scale(c)
        if not acc.is_zero():
            witness = tuple((v, combo[t]) for t, v in enumerate(group_vars))
            return CheckReport(False, name, witness, acc, A.zero())
    return CheckReport(True, name, note="polarized sweep over all basis tuples")


# -- certificates --------------------------------------------------------------


def subst_monomial(m, sub):
    """Plug monomials into a monomial's variables (alpha shifts distribute)."""

    def go(tree):
        if tree[0] == "v":
            name, k = tree[1], tree[2]
            if name not in sub:
                raise ValueError("substitution missing variable %r" % name)
            return sub[name].alpha(k).tree
        return ("m", go(tree[1]), go(tree[2]))

    return HomMonomial(go(m.tree))


def subst_poly(p, sub):
    out = {}
    for m, c in p._terms.items():
        m2 = subst_monomial(m, sub)
        acc = out.get(m2, ZERO) + c
        if acc == 0:
            out.pop(m2, None)
        else:
            out[m2] = acc
    q = HomPolynomial()
    q._terms = out
    return q


def _axiom_polynomial(axiom):
    """(defining polynomial, formal variables) of a certificate axiom."""
    if axiom == "right-alternative":
        return ra_polynomial(), ("x", "y", "z")
    if axiom == "hom-teichmuller":
        return teichmuller_f(var("w"), var("x"), var("y"), var("z")), ("w", "x", "y", "z")
    if axiom.startswith("defect:"):
        name = axiom[len("defect:"):]
        reg = identity_registry()
        if name not in reg:
            raise ValueError("certificate references unknown identity %r" % name)
        idf = reg[name]
        return idf.defect(), idf.variables
    raise ValueError("unknown certificate axiom %r" % axiom)


def build_instance(entry):
    """One certificate instance -> (coefficient, polynomial)."""
    from .dsl import parse_monomial

    if not isinstance(entry, dict) or "coeff" not in entry or "axiom" not in entry:
        raise ValueError("certificate instance needs coeff and axiom: %r" % (entry,))
    coeff = parse_scalar(entry["coeff"])
    base, formal = _axiom_polynomial(entry["axiom"])
    raw_sub = entry.get("substitution", {})
    if set(raw_sub) != set(formal):
        raise ValueError(
            "substitution for %s must cover exactly %r, got %r"
            % (entry["axiom"], sorted(formal), sorted(raw_sub))
        )
    sub = {v: parse_monomial(t) for v, t in raw_sub.items()}
    inst = subst_poly(base, sub)
    for op in entry.get("wrap", []):
        if not isinstance(op, (list, tuple)) or len(op) != 2:
            raise ValueError("bad wrap entry %r" % (op,))
        tag, arg = op
        if tag == "alpha":
            if not isinstance(arg, int) or arg < 1:
                raise ValueError("alpha wrap needs a positive shift, got %r" % (arg,))
            inst = inst.alpha(arg)
        elif tag == "premul":
            inst = poly_mul(HomPolynomial({parse_monomial(arg): ONE}), inst)
        elif tag == "postmul":
            inst = poly_mul(inst, HomPolynomial({parse_monomial(arg): ONE}))
        else:
            raise ValueError("unknown wrap op %r" % (tag,))
    return coeff, inst


def load_certificates():
    """The shipped certificate data, keyed by identity name."""
    text = resources.files("homalt").joinpath("data/certificates.json").read_text()
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("certificate file must map identity names to instance lists")
    reg = identity_registry()
    for name, entry in data.items():
        if name not in reg:
            raise ValueError("certificate for unknown identity %r" % name)
        if not isinstance(entry, dict) or not isinstance(entry.get("instances"), list):
            raise ValueError("certificate %r needs an 'instances' list" % name)
    return data


def verify_certificate(name, instances):
    """(ok, residue): does the instance sum normalize to the defect?"""
    target = identity_defect(name)
    total = HomPolynomial.zero()
    for entry in instances:
        coeff, inst = build_instance(entry)
        total = total + inst.scale(coeff)
    residue = target - total
    return residue.is_zero(), residue


def verify_all_certificates():
    """Verify every shipped certificate; {name: CheckReport}."""
    data = load_certificates()
    out = {}
    for name, entry in data.items():
        ok, residue = verify_certificate(name, entry["instances"])
        out[name] = CheckReport(
            ok,
            "certificate:%s" % name,
            witness=None if ok else (repr(residue),),
            note="%d instances" % len(entry["instances"]),
        )
    return out

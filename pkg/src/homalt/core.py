"""Finite-dimensional Hom-algebras over Q.

A Hom-algebra is a vector space with a bilinear product mu and a linear
self-map alpha.  The product is stored as structure constants
c[i][j][k] (coefficient of basis k in e_i * e_j), alpha as a matrix
acting on coordinate rows from the right.

The Hom-associator is

    as(x, y, z) = (x*y) * alpha(z) - alpha(x) * (y*z)

and the laws checked here are its alternating vanishing conditions:
right Hom-alternative means as(x, y, y) = 0, left Hom-alternative means
as(x, x, y) = 0, Hom-flexible means as(x, y, x) = 0.  All checks run
over the linearized forms on basis tuples, which is equivalent over Q,
and report the lexicographically first failing tuple as a witness.
"""

import json
from dataclasses import dataclass
from typing import Any, Optional

from .linalg import (
    Matrix,
    Scalar,
    Vector,
    ZERO,
    format_scalar,
    parse_scalar,
    qq,
    vec_mat,
)

__all__ = [
    "HomAlgebra",
    "Element",
    "CheckReport",
    "mul",
    "apply_alpha",
    "hom_associator",
    "commutator",
    "random_element",
    "is_multiplicative",
    "is_right_hom_alternative",
    "is_left_hom_alternative",
    "is_hom_flexible",
    "is_hom_alternative",
    "algebra_to_json",
    "algebra_from_json",
    "save_algebra",
    "load_algebra",
]


class HomAlgebra:
    """(A, mu, alpha) with A = Q^dim."""

    def __init__(self, dim, basis_names, mu, alpha):
        assert isinstance(dim, int) and dim >= 1
        basis_names = tuple(str(n) for n in basis_names)
        assert len(basis_names) == dim, "need one name per basis vector"
        assert len(set(basis_names)) == dim, "basis names must be distinct"
        assert isinstance(alpha, Matrix) and alpha.rows == dim and alpha.cols == dim
        self.dim = dim
        self.basis_names = basis_names
        rows = []
        for i in range(dim):
            assert len(mu[i]) == dim
            rows.append(tuple(Vector(mu[i][j]) for j in range(dim)))
            for v in rows[-1]:
                assert len(v) == dim
        self.mu = tuple(rows)
        self.alpha = alpha
        # sparse view of mu used by the hot loops
        self._mu_nz = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(self.mu[i][j]) if c != 0)
                for j in range(dim)
            )
            for i in range(dim)
        )
        self._mult_report = None

    # -- element factories -------------------------------------------------

    def element(self, coords):
        v = coords if isinstance(coords, Vector) else Vector(coords)
        assert len(v) == self.dim
        return Element(self, v)

    def basis_element(self, i):
        return Element(self, Vector.unit(self.dim, i))

    def zero(self):
        return Element(self, Vector.zero(self.dim))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def structure_constant(self, i, j, k):
        return self.mu[i][j][k]

    def __repr__(self):
        return "HomAlgebra(dim=%d, basis=%s)" % (self.dim, list(self.basis_names))


class Element:
    """An element of a specific HomAlgebra instance.

    Elements remember which algebra they belong to; combining elements of
    two different instances is an error even if the instances happen to
    have equal structure constants.
    """

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = coords

    def _check_same(self, other):
        if not isinstance(other, Element):
            raise ValueError("expected an Element, got %r" % (other,))
        if other.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._check_same(other)
        return Element(self.algebra, self.coords + other.coords)

    def __sub__(self, other):
        self._check_same(other)
        return Element(self.algebra, self.coords - other.coords)

    def __neg__(self):
        return Element(self.algebra, -self.coords)

    def scale(self, c):
        return Element(self.algebra, self.coords.scale(c))

    def __rmul__(self, c):
        if isinstance(c, (int, Scalar)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self.algebra, self, other)
        return NotImplemented

    def is_zero(self):
        return self.coords.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        parts = []
        for name, c in zip(self.algebra.basis_names, self.coords):
            if c == 0:
                continue
            if c == 1:
                parts.append("+ %s" % name)
            elif c == -1:
                parts.append("- %s" % name)
            elif c < 0:
                parts.append("- %s*%s" % (format_scalar(-c), name))
            else:
                parts.append("+ %s*%s" % (format_scalar(c), name))
        if not parts:
            return "0"
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def mul(A, x, y):
    """Product x*y in A."""
    if x.algebra is not A or y.algebra is not A:
        raise ValueError("elements belong to different algebras")
    acc = [ZERO] * A.dim
    nz = A._mu_nz
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        row = nz[i]
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            s = xi * yj
            for k, c in row[j]:
                acc[k] += s * c
    return Element(A, Vector(acc))


def apply_alpha(A, x):
    """alpha(x)."""
    if x.algebra is not A:
        raise ValueError("elements belong to different algebras")
    return Element(A, vec_mat(x.coords, A.alpha))


def hom_associator(A, x, y, z):
    """as(x, y, z) = (x*y)*alpha(z) - alpha(x)*(y*z)."""
    return mul(A, mul(A, x, y), apply_alpha(A, z)) - mul(A, apply_alpha(A, x), mul(A, y, z))


def commutator(A, x, y):
    """[x, y] = x*y - y*x."""
    return mul(A, x, y) - mul(A, y, x)


_NUMERATORS = tuple(range(-3, 4))
_DENOMINATORS = (1, 2, 3)


def random_element(A, rng):
    """Seeded random element: numerators in -3..3, denominators in 1..3."""
    return A.element(
        [qq(rng.choice(_NUMERATORS), rng.choice(_DENOMINATORS)) for _ in range(A.dim)]
    )


@dataclass
class CheckReport:
    """Outcome of a law check.

    witness is None exactly when the check passed; otherwise it is the
    lexicographically first failing tuple (basis indices for swept laws,
    sampled Elements otherwise) and lhs/rhs hold the two evaluated sides
    at that witness.
    """

    passed: bool
    law: str
    witness: Optional[tuple] = None
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    def as_dict(self):
        return {
            "passed": self.passed,
            "law": self.law,
            "witness": None if self.witness is None else [repr(w) for w in self.witness],
            "lhs": None if self.lhs is None else repr(self.lhs),
            "rhs": None if self.rhs is None else repr(self.rhs),
            "note": self.note,
        }

    def __bool__(self):
        return self.passed


def is_multiplicative(A):
    """alpha(x*y) == alpha(x)*alpha(y), checked on all basis pairs."""
    if A._mult_report is not None:
        return A._mult_report
    report = CheckReport(True, "multiplicative")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = A.element(vec_mat(A.mu[i][j], A.alpha))
            rhs = mul(A, apply_alpha(A, A.basis_element(i)), apply_alpha(A, A.basis_element(j)))
            if lhs != rhs:
                report = CheckReport(False, "multiplicative", (i, j), lhs, rhs)
                break
        if not report.passed:
            break
    A._mult_report = report
    return report


def is_right_hom_alternative(A):
    """as(x, y, z) + as(x, z, y) == 0 on basis triples (degree-2 slot linearized)."""
    basis = A.basis()
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(j, A.dim):
                lhs = hom_associator(A, basis[i], basis[j], basis[k])
                rhs = -hom_associator(A, basis[i], basis[k], basis[j])
                if lhs != rhs:
                    return CheckReport(False, "right-hom-alternative", (i, j, k), lhs, rhs)
    return CheckReport(True, "right-hom-alternative")


def is_left_hom_alternative(A):
    """as(x, x, y) = 0, linearized to as(x,y,z) + as(y,x,z) == 0 on triples."""
    basis = A.basis()
    for i in range(A.dim):
        for j in range(i, A.dim):
            for k in range(A.dim):
                lhs = hom_associator(A, basis[i], basis[j], basis[k])
                rhs = -hom_associator(A, basis[j], basis[i], basis[k])
                if lhs != rhs:
                    return CheckReport(False, "left-hom-alternative", (i, j, k), lhs, rhs)
    return CheckReport(True, "left-hom-alternative")


def is_hom_flexible(A):
    """as(x, y, x) = 0, linearized to as(x,y,z) + as(z,y,x) == 0 on triples."""
    basis = A.basis()
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(i, A.dim):
                lhs = hom_associator(A, basis[i], basis[j], basis[k])
                rhs = -hom_associator(A, basis[k], basis[j], basis[i])
                if lhs != rhs:
                    return CheckReport(False, "hom-flexible", (i, j, k), lhs, rhs)
    return CheckReport(True, "hom-flexible")


def is_hom_alternative(A):
    """Both left and right Hom-alternative."""
    left = is_left_hom_alternative(A)
    if not left.passed:
        return CheckReport(False, "hom-alternative", left.witness, left.lhs, left.rhs,
                           note="left alternativity fails")
    right = is_right_hom_alternative(A)
    if not right.passed:
        return CheckReport(False, "hom-alternative", right.witness, right.lhs, right.rhs,
                           note="right alternativity fails")
    return CheckReport(True, "hom-alternative")


# -- JSON interchange ------------------------------------------------------
#
# {"dim": n,
#  "basis": ["e", ...],
#  "mu": [{"i": 0, "j": 0, "k": 0, "c": "1"}, ...]   # zero entries omitted
#  "alpha": [["1", "0", ...], ...]}                  # dense rows


def algebra_to_json(A):
    entries = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(A.dim):
                c = A.mu[i][j][k]
                if c != 0:
                    entries.append({"i": i, "j": j, "k": k, "c": format_scalar(c)})
    return {
        "dim": A.dim,
        "basis": list(A.basis_names),
        "mu": entries,
        "alpha": [[format_scalar(a) for a in row] for row in A.alpha.data],
    }


def _fail(msg):
    raise ValueError("bad algebra JSON: " + msg)


def algebra_from_json(obj):
    if not isinstance(obj, dict):
        _fail("top level must be an object")
    for key in ("dim", "basis", "mu", "alpha"):
        if key not in obj:
            _fail("missing key %r" % key)
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 1:
        _fail("dim must be a positive integer")
    basis = obj["basis"]
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(b, str) for b in basis):
        _fail("basis must be a list of %d strings" % dim)
    if len(set(basis)) != dim:
        _fail("basis names must be distinct")
    mu = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    if not isinstance(obj["mu"], list):
        _fail("mu must be a list of {i,j,k,c} entries")
    seen = set()
    for ent in obj["mu"]:
        if not isinstance(ent, dict) or set(ent) != {"i", "j", "k", "c"}:
            _fail("mu entries must be objects with keys i, j, k, c (got %r)" % (ent,))
        i, j, k = ent["i"], ent["j"], ent["k"]
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 0 <= idx < dim:
                _fail("mu index out of range in %r" % (ent,))
        if (i, j, k) in seen:
            _fail("duplicate mu entry for (%d, %d, %d)" % (i, j, k))
        seen.add((i, j, k))
        try:
            mu[i][j][k] = parse_scalar(ent["c"])
        except (ValueError, TypeError):
            _fail("mu coefficient %r is not a rational literal" % (ent.get("c"),))
    alpha = obj["alpha"]
    if not isinstance(alpha, list) or len(alpha) != dim:
        _fail("alpha must be a list of %d rows" % dim)
    rows = []
    for r, row in enumerate(alpha):
        if not isinstance(row, list) or len(row) != dim:
            _fail("alpha row %d must have %d entries" % (r, dim))
        try:
            rows.append([parse_scalar(a) for a in row])
        except (ValueError, TypeError):
            _fail("alpha row %d contains a non-rational entry" % r)
    return HomAlgebra(dim, basis, mu, Matrix(rows))


def save_algebra(A, path):
    with open(path, "w") as fh:
        json.dump(algebra_to_json(A), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_algebra(path):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError("bad algebra JSON in %s: %s" % (path, exc)) from exc
    return algebra_from_json(obj)

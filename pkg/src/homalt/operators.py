"""Multiplication operators L_x, R_x and their identities.

Operators act on the right of row vectors:

    a L_x = x*a,    a R_x = a*x,    a alpha_op = alpha(a),

so composing "f then g" multiplies matrices in reading order, fg has
matrix M_f @ M_g, and operator identities can be checked as exact
matrix identities.

For a multiplicative right Hom-alternative algebra,

    R_x R_alpha(x) = alpha_op R_{x*x}                       (all x)
    L_y L_alpha(x) - alpha_op L_{x*y}
        = L_x R_alpha(y) - R_y L_alpha(x)                   (all x, y)

and for an idempotent e (e*e = e = alpha(e)), with L = L_e, R = R_e:

    R^(n+1) = alpha^n R,     so R is alpha-idempotent (R^2 = alpha R)
    L^2 - alpha L = [L, R]
    [alpha, L] = 0 = [alpha, R]
    (L^2 - alpha L)^2 = 0 = [L, R]^2
    L R L = alpha L R
    L^3 - alpha L^2 = alpha L R - R L R

and T = 3 alpha^2 L^2 - 2 alpha L^3 satisfies T^(n+1) = alpha^(4n) T
(so T is alpha^4-idempotent) and [T, R] = 0.
"""

import random

from .linalg import Matrix, identity_matrix, mat_mul, mat_pow
from .core import (
    CheckReport,
    apply_alpha,
    is_multiplicative,
    is_right_hom_alternative,
    mul,
    random_element,
)
from .idempotents import is_idempotent

__all__ = [
    "MulOperator",
    "left_op",
    "right_op",
    "alpha_op",
    "op_commutator",
    "build_T",
    "is_alpha_n_idempotent",
    "check_mul_operator_identities",
    "check_idempotent_operator_suite",
]


class MulOperator:
    """A linear operator on A acting on the right of coordinate rows.

    kind records provenance ("left x", "right x", "twist", "composite")
    and is ignored by equality, which compares matrices only.
    """

    __slots__ = ("algebra", "matrix", "kind")

    def __init__(self, algebra, matrix, kind="composite"):
        assert isinstance(matrix, Matrix)
        assert matrix.rows == algebra.dim and matrix.cols == algebra.dim
        self.algebra = algebra
        self.matrix = matrix
        self.kind = kind

    def apply(self, x):
        if x.algebra is not self.algebra:
            raise ValueError("elements belong to different algebras")
        from .linalg import vec_mat

        return self.algebra.element(vec_mat(x.coords, self.matrix))

    def _check_same(self, other):
        if not isinstance(other, MulOperator) or other.algebra is not self.algebra:
            raise ValueError("operators belong to different algebras")

    def __mul__(self, other):
        """Composition in action order: a (fg) = (a f) g."""
        self._check_same(other)
        return MulOperator(self.algebra, mat_mul(self.matrix, other.matrix))

    def __add__(self, other):
        self._check_same(other)
        return MulOperator(self.algebra, self.matrix + other.matrix)

    def __sub__(self, other):
        self._check_same(other)
        return MulOperator(self.algebra, self.matrix - other.matrix)

    def __neg__(self):
        return MulOperator(self.algebra, -self.matrix)

    def scale(self, c):
        return MulOperator(self.algebra, self.matrix.scale(c))

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        return MulOperator(self.algebra, mat_pow(self.matrix, n))

    def is_zero(self):
        return self.matrix.is_zero()

    def __eq__(self, other):
        return isinstance(other, MulOperator) and other.matrix == self.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "MulOperator(%s, %r)" % (self.kind, self.matrix)


def left_op(A, x):
    """L_x: a |-> x*a."""
    rows = [list(mul(A, x, A.basis_element(i)).coords) for i in range(A.dim)]
    return MulOperator(A, Matrix(rows), "left %r" % (x,))


def right_op(A, x):
    """R_x: a |-> a*x."""
    rows = [list(mul(A, A.basis_element(i), x).coords) for i in range(A.dim)]
    return MulOperator(A, Matrix(rows), "right %r" % (x,))


def alpha_op(A):
    return MulOperator(A, A.alpha, "twist")


def identity_op(A):
    return MulOperator(A, identity_matrix(A.dim), "identity")


def op_commutator(f, g):
    """[f, g] = fg - gf."""
    return f * g - g * f


def check_mul_operator_identities(A, samples=25, seed=0):
    """The two multiplication-operator identities above.

    R_x R_alpha(x) = alpha R_{x*x} is checked on seeded random elements
    and the bilinear L/R exchange identity on all basis pairs (which
    proves it).  No preconditions are enforced: on algebras that are
    not multiplicative right Hom-alternative this simply fails, with
    the witness saying where.
    """
    law = "mul-operator-identities"
    al = alpha_op(A)
    rng = random.Random(seed)
    for _ in range(samples):
        x = random_element(A, rng)
        lhs = right_op(A, x) * right_op(A, apply_alpha(A, x))
        rhs = al * right_op(A, mul(A, x, x))
        if lhs != rhs:
            return CheckReport(False, law, (x,), lhs.matrix, rhs.matrix,
                               note="R_x R_alpha(x) != alpha R_{x*x}")
    for i in range(A.dim):
        bi = A.basis_element(i)
        li = left_op(A, bi)
        lai = left_op(A, apply_alpha(A, bi))
        rai = right_op(A, apply_alpha(A, bi))
        for j in range(A.dim):
            bj = A.basis_element(j)
            # x = e_i, y = e_j
            lhs = left_op(A, bj) * lai - al * left_op(A, mul(A, bi, bj))
            rhs = li * right_op(A, apply_alpha(A, bj)) - right_op(A, bj) * lai
            if lhs != rhs:
                return CheckReport(False, law, (i, j), lhs.matrix, rhs.matrix,
                                   note="L/R exchange fails on basis pair")
    return CheckReport(True, law,
                       note="R-composition sampled %d times; L/R exchange proved on basis pairs" % samples)


def build_T(A, e):
    """T = 3 alpha^2 L^2 - 2 alpha L^3 for L = L_e."""
    L = left_op(A, e)
    al = alpha_op(A)
    return ((al ** 2) * (L ** 2)).scale(3) - (al * (L ** 3)).scale(2)


def is_alpha_n_idempotent(A, f, n):
    """f*f == alpha^n f.

    n may be negative only when alpha is invertible (ValueError
    otherwise: negative twist powers need alpha^(-1)).
    """
    if not isinstance(f, MulOperator) or f.algebra is not A:
        raise ValueError("expected a MulOperator on this algebra")
    if not isinstance(n, int):
        raise ValueError("n must be an integer, got %r" % (n,))
    if n < 0:
        try:
            an = mat_pow(A.alpha, n)
        except ValueError as exc:
            raise ValueError(
                "alpha^%d needs invertible alpha, but alpha is singular" % n
            ) from exc
    else:
        an = mat_pow(A.alpha, n)
    return mat_mul(f.matrix, f.matrix) == mat_mul(an, f.matrix)


def check_idempotent_operator_suite(A, e, nmax=5):
    """All operator identities at an idempotent e, as matrix identities.

    Precondition failures raise ValueError: e must be an idempotent
    (e*e = e = alpha(e)) and A must be multiplicative right
    Hom-alternative -- the identities are theorems only under those
    hypotheses, so feeding anything else is a usage error, not a
    refutation.
    """
    if not is_idempotent(A, e):
        raise ValueError(
            "operator suite needs an idempotent: e*e = e = alpha(e), got e = %r "
            "with e*e = %r, alpha(e) = %r" % (e, mul(A, e, e), apply_alpha(A, e))
        )
    rep = is_multiplicative(A)
    if not rep.passed:
        raise ValueError("operator suite needs a multiplicative algebra; "
                         "witness %r" % (rep.witness,))
    rep = is_right_hom_alternative(A)
    if not rep.passed:
        raise ValueError("operator suite needs a right Hom-alternative algebra; "
                         "witness %r" % (rep.witness,))
    if not isinstance(nmax, int) or nmax < 0:
        raise ValueError("nmax must be a non-negative integer, got %r" % (nmax,))

    L = left_op(A, e)
    R = right_op(A, e)
    al = alpha_op(A)
    zero = MulOperator(A, Matrix.zero(A.dim, A.dim))
    lsq = L * L - al * L
    lr = op_commutator(L, R)
    T = build_T(A, e)

    checks = []
    for n in range(nmax + 1):
        checks.append(("R^%d = alpha^%d R" % (n + 1, n), R ** (n + 1), (al ** n) * R))
    checks.extend(
        [
            ("L^2 - alpha L = [L, R]", lsq, lr),
            ("[alpha, L] = 0", op_commutator(al, L), zero),
            ("[alpha, R] = 0", op_commutator(al, R), zero),
            ("(L^2 - alpha L)^2 = 0", lsq * lsq, zero),
            ("[L, R]^2 = 0", lr * lr, zero),
            ("L R L = alpha L R", L * R * L, al * L * R),
            ("L^3 - alpha L^2 = alpha L R - R L R",
             L ** 3 - al * (L ** 2), al * L * R - R * L * R),
            ("T^2 = alpha^4 T", T * T, (al ** 4) * T),
            ("[T, R] = 0", op_commutator(T, R), zero),
        ]
    )
    for n in range(1, nmax + 1):
        checks.append(
            ("T^%d = alpha^%d T" % (n + 1, 4 * n), T ** (n + 1), (al ** (4 * n)) * T)
        )

    law = "idempotent-operator-suite"
    for name, lhs, rhs in checks:
        if lhs != rhs:
            return CheckReport(False, law, (name,), lhs.matrix, rhs.matrix)
    return CheckReport(True, law, note="%d identities verified" % len(checks))

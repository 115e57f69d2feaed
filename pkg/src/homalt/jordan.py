"""Hom-Jordan algebras and Hom-Jordan admissibility.

(A, mu, alpha) is Hom-Jordan when mu is commutative and

    as(x*x, alpha(y), alpha(x)) = 0,

and a (possibly non-commutative) algebra is Hom-Jordan admissible when
its plus algebra A+ = (A, (mu + mu^op)/2, alpha) is Hom-Jordan.
Multiplicative right Hom-alternative algebras are always Hom-Jordan
admissible; that is the main consequence checked here.

The Jordan identity is homogeneous of degree 3 in x and linear in y, so
it is checked by polarizing the x-slot (inclusion-exclusion over basis
triples, an exact proof over Q) against every basis y.

check_hom_jordan_admissible evaluates the identity along two
independently coded routes -- the associator form above and the
expanded form

    (alpha(x)*alpha(y))*alpha(x*x) = alpha^2(x)*(alpha(y)*(x*x))

-- which for a commutative product are pointwise negatives of each
other, so their verdicts must agree; a disagreement would mean a bug in
this package, not a property of the input, and raises RuntimeError.
"""

from .core import CheckReport, apply_alpha, hom_associator, mul
from .constructions import plus_algebra
from .powers import polarized_defect_sweep

__all__ = ["jordan_defect", "check_hom_jordan", "check_hom_jordan_admissible"]


def jordan_defect(A, x, y):
    """as(x*x, alpha(y), alpha(x)) in A."""
    return hom_associator(A, mul(A, x, x), apply_alpha(A, y), apply_alpha(A, x))


def _direct_defect(A, x, y):
    """(alpha(x)*alpha(y))*alpha(x^2) - alpha^2(x)*(alpha(y)*x^2)."""
    ax = apply_alpha(A, x)
    ay = apply_alpha(A, y)
    x2 = mul(A, x, x)
    lhs = mul(A, mul(A, ax, ay), apply_alpha(A, x2))
    rhs = mul(A, apply_alpha(A, ax), mul(A, ay, x2))
    return lhs - rhs


def _polarized_jordan(A, defect_fn, law):
    basis = A.basis()
    return polarized_defect_sweep(
        A, 3, lambda x: [(yi, defect_fn(A, x, basis[yi])) for yi in range(A.dim)], law
    )


def check_hom_jordan(A):
    """Commutativity plus the polarized Hom-Jordan identity.

    Commutativity is checked first (its own witness: the first basis
    pair with e_i*e_j != e_j*e_i); the identity sweep witnesses the
    first failing (x-multiset, y-index) pair.
    """
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            if A.mu[i][j] != A.mu[j][i]:
                return CheckReport(
                    False,
                    "hom-jordan",
                    (i, j),
                    A.element(A.mu[i][j]),
                    A.element(A.mu[j][i]),
                    note="product is not commutative",
                )
    return _polarized_jordan(A, jordan_defect, "hom-jordan")


def check_hom_jordan_admissible(A):
    """Is A+ Hom-Jordan?  Proved/refuted by two independent routes."""
    Ap = plus_algebra(A)
    via_associator = check_hom_jordan(Ap)
    direct = _polarized_jordan(Ap, _direct_defect, "hom-jordan-admissible")
    if via_associator.passed != direct.passed:
        raise RuntimeError(
            "internal inconsistency: associator route says %s, direct route says %s"
            % (via_associator.passed, direct.passed)
        )
    picked = via_associator if not via_associator.passed else direct
    return CheckReport(
        picked.passed,
        "hom-jordan-admissible",
        picked.witness,
        picked.lhs,
        picked.rhs,
        note="associator and direct routes agree",
    )

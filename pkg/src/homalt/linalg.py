"""Exact rational scalars and small dense matrices.

Everything downstream works over Q with arbitrary-precision rationals;
gmpy2.mpq is used when available (noticeably faster), stdlib Fraction
otherwise.  Both keep values in lowest terms with positive denominator,
which is what the canonical-form guarantees below rely on.

Conventions: vectors are coordinate rows, matrices act on the right
(coords of f(x) are x.coords * M_f), and kernel_basis(m) returns the
*column* kernel, i.e. vectors v with m @ v = 0.  Callers that need the
row kernel pass the transpose.
"""

import re
from math import gcd

try:
    from gmpy2 import mpq as _RAT
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as _RAT

Scalar = type(_RAT(0))


def qq(p, q=1):
    """Exact rational p/q."""
    return _RAT(p, q)


ZERO = qq(0)
ONE = qq(1)

_SCALAR_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def as_scalar(x):
    """Coerce an int, Scalar or 'p/q' string to a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return qq(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise ValueError("cannot interpret %r as an exact rational" % (x,))


def parse_scalar(s):
    """Parse 'p' or 'p/q' (q > 0) into a Scalar.

    >>> parse_scalar("-3/6") == qq(-1, 2)
    True
    """
    t = s.strip()
    if not _SCALAR_RE.match(t):
        raise ValueError("bad rational literal %r (expected p or p/q)" % (s,))
    if "/" in t:
        p, q = t.split("/")
        if int(q) == 0:
            raise ValueError("bad rational literal %r (zero denominator)" % (s,))
        return qq(int(p), int(q))
    return qq(int(t))


def format_scalar(x):
    """Inverse of parse_scalar: 'p' when the denominator is 1, else 'p/q'."""
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


class Vector:
    """Immutable row of Scalars."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(as_scalar(e) for e in entries)

    @staticmethod
    def zero(n):
        return Vector([ZERO] * n)

    @staticmethod
    def unit(n, i):
        return Vector([ONE if j == i else ZERO for j in range(n)])

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other):
        assert len(self) == len(other)
        return Vector([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert len(self) == len(other)
        return Vector([a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Vector([-a for a in self.entries])

    def scale(self, c):
        c = as_scalar(c)
        return Vector([c * a for a in self.entries])

    __rmul__ = scale

    def dot(self, other):
        assert len(self) == len(other)
        return sum((a * b for a, b in zip(self.entries, other.entries)), ZERO)

    def is_zero(self):
        return all(a == 0 for a in self.entries)

    def __eq__(self, other):
        return isinstance(other, Vector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Vector(%s)" % (", ".join(format_scalar(a) for a in self.entries),)


class Matrix:
    """Immutable dense matrix of Scalars; rows/cols are the dimensions."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = tuple(tuple(as_scalar(e) for e in row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        assert all(len(r) == self.cols for r in self.data), "ragged rows"

    @staticmethod
    def from_rows(rows):
        return Matrix(rows)

    @staticmethod
    def zero(r, c):
        return Matrix([[ZERO] * c for _ in range(r)])

    @staticmethod
    def diagonal(entries):
        n = len(entries)
        return Matrix(
            [[as_scalar(entries[i]) if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return Vector(self.data[i])

    def col(self, j):
        return Vector([self.data[i][j] for i in range(self.rows)])

    def transpose(self):
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self):
        assert self.rows == self.cols
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, c):
        c = as_scalar(c)
        return Matrix([[c * a for a in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return NotImplemented

    def __pow__(self, n):
        return mat_pow(self, n)

    def is_zero(self):
        return all(a == 0 for row in self.data for a in row)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return "Matrix([%s])" % (
            ",\n        ".join(
                "[" + ", ".join(format_scalar(a) for a in row) + "]" for row in self.data
            ),
        )


def identity_matrix(n):
    return Matrix.diagonal([ONE] * n)


def mat_mul(a, b):
    """Matrix product a*b."""
    assert a.cols == b.rows, "shape mismatch: %dx%d * %dx%d" % (a.rows, a.cols, b.rows, b.cols)
    bt = b.transpose().data
    return Matrix(
        [
            [sum((x * y for x, y in zip(row, col)), ZERO) for col in bt]
            for row in a.data
        ]
    )


def mat_vec(m, v):
    """m @ v for a column vector v (returns a Vector of length m.rows)."""
    assert m.cols == len(v)
    return Vector([sum((a * x for a, x in zip(row, v)), ZERO) for row in m.data])


def vec_mat(v, m):
    """Row vector times matrix: v @ m."""
    assert len(v) == m.rows
    return Vector(
        [sum((v[i] * m.data[i][j] for i in range(m.rows)), ZERO) for j in range(m.cols)]
    )


def mat_pow(m, n):
    """m**n; negative n inverts first (ValueError when singular)."""
    assert m.rows == m.cols
    if n < 0:
        m = inverse(m)
        n = -n
    out = identity_matrix(m.rows)
    base = m
    while n:
        if n & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        n >>= 1
    return out


def _cleared_rows(m):
    # Scale each row by the lcm of its denominators so the fraction-free
    # elimination below really does stay in integers.  Row scaling changes
    # neither rank, row space nor kernel.
    out = []
    for row in m.data:
        l = 1
        for a in row:
            d = int(a.denominator)
            if d != 1:
                l = l // gcd(l, d) * d
        out.append([a * l for a in row])
    return out


def _rref(m):
    """Reduced row-echelon form of m.

    Forward pass is Bareiss-style fraction-free elimination (all
    intermediates are integers once rows are cleared), the back pass
    normalises pivots to 1 and clears above them.  Returns (rows,
    pivot_columns).
    """
    rows = _cleared_rows(m)
    nr, nc = m.rows, m.cols
    pivots = []
    prev = ONE
    r = 0
    for c in range(nc):
        p = None
        for i in range(r, nr):
            if rows[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nr):
            fi = rows[i][c]
            for j in range(c, nc):
                rows[i][j] = (piv * rows[i][j] - fi * rows[r][j]) / prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == nr:
            break
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        piv = rows[k][c]
        rows[k] = [a / piv for a in rows[k]]
        for i in range(k):
            f = rows[i][c]
            if f != 0:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[k])]
    return rows, pivots


def rank(m):
    return len(_rref(m)[1])


def kernel_basis(m):
    """Canonical basis of {v : m @ v = 0}.

    One basis vector per free column of rref(m), with a 1 in its free
    coordinate and 0 in every other free coordinate; stacked as columns
    the result is in reduced column-echelon form, so equal kernels give
    byte-identical bases.  len(result) + rank(m) == m.cols.
    """
    rows, pivots = _rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for k, c in enumerate(pivots):
            v[c] = -rows[k][f]
        basis.append(Vector(v))
    return basis


def solve(m, b):
    """Canonical solution x of m @ x = b (free coordinates 0), or None.

    Returns None when the system is inconsistent.
    """
    assert m.rows == len(b)
    aug = Matrix([list(row) + [b[i]] for i, row in enumerate(m.data)])
    rows, pivots = _rref(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for k, c in enumerate(pivots):
        x[c] = rows[k][m.cols]
    return Vector(x)


def inverse(m):
    """Matrix inverse; ValueError when singular."""
    assert m.rows == m.cols
    n = m.rows
    aug = Matrix([list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m.data)])
    rows, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return Matrix([row[n:] for row in rows[:n]])


def char_poly(m):
    """Characteristic polynomial det(tI - m) by Faddeev-LeVerrier.

    Returns the monic coefficient list in descending degree,
    [1, c_{n-1}, ..., c_0]; everything stays rational (no root finding).

    >>> char_poly(identity_matrix(2)) == [qq(1), qq(-2), qq(1)]
    True
    """
    assert m.rows == m.cols
    n = m.rows
    coeffs = [ONE]
    M = identity_matrix(n)
    for k in range(1, n + 1):
        M = mat_mul(m, M)
        ck = -M.trace() / qq(k)
        coeffs.append(ck)
        if k < n:
            M = M + Matrix.diagonal([ck] * n)
    return coeffs

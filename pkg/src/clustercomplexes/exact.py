"""Exact scalar and matrix kernel.

Scalars are elements a + b*sqrt(5) of the real quadratic field Q(sqrt5),
stored as pairs of arbitrary-precision rationals.  This single extension
covers the icosahedral types H3 and H4 (via the golden ratio); every
crystallographic type stays inside the rationals (b == 0).  No floating
point enters any computation in this module.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class Scalar:
    """An element a + b*sqrt(5) with exact rational components a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if type(a) is Fraction else Fraction(a)
        self.b = b if type(b) is Fraction else Fraction(b)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = coerce_scalar(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = coerce_scalar(other)
        return Scalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return coerce_scalar(other) - self

    def __mul__(self, other):
        other = coerce_scalar(other)
        # (a + b r)(c + d r) with r^2 = 5
        return Scalar(self.a * other.a + 5 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.a, -self.b)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def inverse(self) -> "Scalar":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("scalar has no inverse: %r" % (self,))
        return Scalar(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        return self * coerce_scalar(other).inverse()

    def __rtruediv__(self, other):
        return coerce_scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparisons (exact, via the real embedding sqrt(5) > 0) -------------

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: compare a^2 with 5 b^2
        if a * a > 5 * b * b:
            return 1 if a > 0 else -1
        if a * a < 5 * b * b:
            return 1 if b > 0 else -1
        return 0  # unreachable: a^2 = 5 b^2 has no rational solution

    def __eq__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            other = coerce_scalar(other)
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other):
        return (self - coerce_scalar(other)).sign() < 0

    def __le__(self, other):
        return (self - coerce_scalar(other)).sign() <= 0

    def __gt__(self, other):
        return (self - coerce_scalar(other)).sign() > 0

    def __ge__(self, other):
        return (self - coerce_scalar(other)).sign() >= 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # -- views ---------------------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def as_int(self) -> int:
        if not self.is_integer():
            raise ValueError("scalar %r is not an integer" % (self,))
        return int(self.a)

    def __float__(self):
        # Reporting/diagnostics only; engine code never converts to float.
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "%s*r5" % (self.b,)
        return "%s%s%s*r5" % (self.a, "+" if self.b > 0 else "-", abs(self.b))


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT5 = Scalar(0, 1)
GOLDEN = Scalar(Fraction(1, 2), Fraction(1, 2))  # (1 + sqrt5) / 2


def coerce_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(x)
    raise TypeError("cannot coerce %r to Scalar" % (x,))


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    out = ZERO
    for x, y in zip(u, v):
        out = out + x * y
    return out


class Matrix:
    """Immutable dense matrix of Scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(coerce_scalar(x) for x in row) for row in entries)
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        ot = tuple(zip(*other.entries))
        return Matrix([[dot(row, col) for col in ot] for row in self.entries])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in difference")
        return Matrix([[x - y for x, y in zip(r1, r2)]
                       for r1, r2 in zip(self.entries, other.entries)])

    def apply(self, v: Sequence[Scalar]) -> tuple:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(dot(row, v) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries)))

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def rank(self) -> int:
        return _rank(list(list(r) for r in self.entries))

    def is_integral(self) -> bool:
        return all(x.is_integer() for row in self.entries for x in row)

    def int_rows(self) -> list:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return [[x.as_int() for x in row] for row in self.entries]

    def __repr__(self):
        return "Matrix(%r)" % (self.entries,)


def _rank(m: list) -> int:
    """Rank by exact Gaussian elimination (mutates its argument)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col].sign() != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col].inverse()
        for i in range(rank + 1, rows):
            f = m[i][col]
            if f.sign() == 0:
                continue
            factor = f * inv
            m[i] = [x - factor * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def reflection_matrix(alpha: Sequence, dim: int | None = None) -> Matrix:
    """Matrix of the reflection x -> x - 2 (x, alpha)/(alpha, alpha) alpha."""
    alpha = tuple(coerce_scalar(x) for x in alpha)
    if dim is None:
        dim = len(alpha)
    if dim != len(alpha):
        raise ValueError("vector has length %d, expected %d" % (len(alpha), dim))
    norm = dot(alpha, alpha)
    if norm.sign() == 0:
        raise ValueError("degenerate reflection: zero vector")
    scale = Scalar(2) / norm
    ident = Matrix.identity(dim)
    return Matrix([[ident.entries[i][j] - scale * alpha[i] * alpha[j]
                    for j in range(dim)] for i in range(dim)])


def fixed_space_dim(m: Matrix) -> int:
    """Dimension of the fixed space ker(M - I), by exact elimination."""
    if m.rows != m.cols:
        raise ValueError("fixed space requires a square matrix")
    return m.rows - (m - Matrix.identity(m.rows)).rank()


def smith_normal_form(m) -> tuple:
    """Smith normal form of an integer matrix.

    Returns (factors, rank) where factors is the tuple of invariant
    factors d1 | d2 | ... (all positive) and rank their count.
    """
    if isinstance(m, Matrix):
        a = m.int_rows()
    else:
        a = [[int(x) for x in row] for row in m]
        if any(len(r) != len(a[0]) for r in a):
            raise ValueError("ragged matrix")
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors = []
    t = 0
    while t < rows and t < cols:
        # pick the nonzero entry of smallest magnitude as pivot
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear column t
            dirty = False
            for i in range(rows):
                if i == t or a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                for j in range(cols):
                    a[i][j] -= q * a[t][j]
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(cols):
                if j == t or a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                for i in range(rows):
                    a[i][j] -= q * a[i][t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    dirty = True
            if dirty:
                continue
            # force divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            bi = bad[0]
            for j in range(cols):
                a[t][j] += a[bi][j]
        factors.append(abs(a[t][t]))
        t += 1
    # normalize the divisibility chain (already holds; keep as a safeguard)
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            g = gcd(factors[i], factors[j])
            factors[i], factors[j] = g, factors[i] // g * factors[j]
    return tuple(factors), len(factors)


def minor_gcd(m, k: int) -> int:
    """gcd of all k x k minors of an integer matrix (test oracle helper)."""
    if isinstance(m, Matrix):
        a = m.int_rows()
    else:
        a = [[int(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0]) if a else 0
    g = 0
    for ri in itertools.combinations(range(rows), k):
        for ci in itertools.combinations(range(cols), k):
            g = gcd(g, _int_det([[a[i][j] for j in ci] for i in ri]))
    return g


def _int_det(a: list) -> int:
    """Determinant of a small integer matrix by fraction-free elimination."""
    n = len(a)
    a = [row[:] for row in a]
    det = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        for i in range(col + 1, n):
            f = Fraction(a[i][col], a[col][col])
            a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    for i in range(n):
        det *= a[i][i]
    return int(det)

"""Exact rational matrix kernel: dense 7x7 and 2x2 matrices over Q.

Matrices store an integer entry grid over a single positive denominator,
canonicalized so the gcd of all entries with the denominator is 1; exact
equality is then tuple equality and products need one gcd pass instead of
one per entry.  Scalars in and out are ``fractions.Fraction`` (always
reduced, positive denominator).  Determinants use fraction-free Bareiss
elimination directly on the integer grid.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

def rat(x) -> Fraction:
    """Coerce ints, strings like '2/3' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class _MatrixBase:
    """Immutable square matrix of rationals (integer grid / denominator)."""

    __slots__ = ("num", "den")

    SIZE: int = 0

    def __init__(self, rows: Iterable[Sequence]):
        fr = tuple(tuple(rat(x) for x in r) for r in rows)
        n = self.SIZE
        if len(fr) != n or any(len(r) != n for r in fr):
            raise ValueError(f"expected {n}x{n} matrix")
        den = 1
        for r in fr:
            for x in r:
                den = lcm(den, x.denominator)
        num = tuple(tuple(int(x * den) for x in r) for r in fr)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num, den):
        """Canonicalizing constructor from an int grid over den != 0."""
        if den < 0:
            den = -den
            num = tuple(tuple(-x for x in r) for r in num)
        g = den
        for r in num:
            for x in r:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g == 1:
                break
        if g > 1:
            den //= g
            num = tuple(tuple(x // g for x in r) for r in num)
        out = object.__new__(cls)
        object.__setattr__(out, "num", tuple(tuple(r) for r in num))
        object.__setattr__(out, "den", den)
        return out

    def __setattr__(self, *a):
        raise AttributeError("matrix is immutable")

    @property
    def rows(self):
        d = self.den
        return tuple(tuple(Fraction(x, d) for x in r) for r in self.num)

    def __getitem__(self, ij):
        i, j = ij
        return Fraction(self.num[i][j], self.den)

    def __eq__(self, other):
        return (
            type(self) is type(other) and self.den == other.den and self.num == other.num
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __mul__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        n = self.SIZE
        a = self.num
        bt = tuple(zip(*other.num))
        rng = range(n)
        num = tuple(
            tuple(sum(ar[k] * bc[k] for k in rng) for bc in bt) for ar in a
        )
        return type(self)._raw(num, self.den * other.den)

    def __add__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        l = lcm(self.den, other.den)
        sa, sb = l // self.den, l // other.den
        num = tuple(
            tuple(x * sa + y * sb for x, y in zip(r, s))
            for r, s in zip(self.num, other.num)
        )
        return type(self)._raw(num, l)

    def __sub__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        l = lcm(self.den, other.den)
        sa, sb = l // self.den, l // other.den
        num = tuple(
            tuple(x * sa - y * sb for x, y in zip(r, s))
            for r, s in zip(self.num, other.num)
        )
        return type(self)._raw(num, l)

    def scale(self, c):
        c = rat(c)
        num = tuple(tuple(x * c.numerator for x in r) for r in self.num)
        return type(self)._raw(num, self.den * c.denominator)

    def transpose(self):
        return type(self)._raw(tuple(zip(*self.num)), self.den)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.num for x in r)

    @classmethod
    def zero(cls):
        n = cls.SIZE
        return cls._raw(tuple((0,) * n for _ in range(n)), 1)

    @classmethod
    def identity(cls):
        n = cls.SIZE
        return cls._raw(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), 1)

    @classmethod
    def from_entries(cls, entries: dict):
        """Build from a sparse {(i, j): value} dict, zero elsewhere."""
        n = cls.SIZE
        rows = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i][j] = rat(v)
        return cls(rows)

    def det(self) -> Fraction:
        """Determinant by Bareiss elimination on the integer grid."""
        n = self.SIZE
        m = [list(r) for r in self.num]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return Fraction(0)
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1], self.den**n)

    def inverse(self):
        """Exact inverse by Gauss-Jordan elimination."""
        n = self.SIZE
        a = [[Fraction(x, self.den) for x in r] for r in self.num]
        b = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            b[col] = [x * inv for x in b[col]]
            for i in range(n):
                if i != col and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[col])]
                    b[i] = [x - f * y for x, y in zip(b[i], b[col])]
        return type(self)(b)

    def __repr__(self):
        body = "\n".join("[" + "  ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"{type(self).__name__}(\n{body}\n)"


class Matrix7(_MatrixBase):
    SIZE = 7


class Matrix2(_MatrixBase):
    SIZE = 2

    def entries(self):
        """(a, b, c, d) reading order."""
        (a, b), (c, d) = self.rows
        return a, b, c, d

    def det(self) -> Fraction:
        (a, b), (c, d) = self.num
        return Fraction(a * d - b * c, self.den**2)

    def inverse(self) -> "Matrix2":
        (a, b), (c, d) = self.num
        dt = a * d - b * c
        if dt == 0:
            raise ZeroDivisionError("matrix is singular")
        return Matrix2._raw(((d * self.den, -b * self.den), (-c * self.den, a * self.den)), dt)


def mat2(a, b, c, d) -> Matrix2:
    return Matrix2([[a, b], [c, d]])


# Gram matrix of the ambient orthogonal group: antidiagonal identity blocks
# around the 3x3 core antidiag(1, -2, 1).
GRAM = Matrix7(
    [
        [0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, -2, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0, 0],
    ]
)

GRAM_INV = GRAM.inverse()


def preserves_form(g: Matrix7) -> bool:
    """True iff g^T * GRAM * g == GRAM exactly and det(g) == 1."""
    return g.transpose() * GRAM * g == GRAM and g.det() == 1


def mat_mul(a: _MatrixBase, b: _MatrixBase) -> _MatrixBase:
    return a * b

"""Gaussian rationals and small exact matrices over them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

_I_POWERS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class GaussianRational:
    """``re + im*i`` with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def i_power(cls, k: int) -> "GaussianRational":
        return cls(*_I_POWERS[k % 4])

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return GaussianRational(x)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * o.conjugate()
        return GaussianRational(p.re / n, p.im / n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"

    def to_json(self):
        return [str(self.re), str(self.im)]


ZERO = GaussianRational(0)
ONE = GaussianRational(1)


@dataclass(frozen=True)
class MonomialMatrix:
    """A matrix with one entry ``i^phase[j]`` per column, at row ``perm[j]``.

    Equivalently ``M e_j = i^{phase[j]} e_{perm[j]}``.
    """

    perm: tuple
    phase: tuple

    @property
    def dim(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "MonomialMatrix":
        return cls(tuple(range(n)), (0,) * n)

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        perm = tuple(self.perm[other.perm[j]] for j in range(other.dim))
        phase = tuple((other.phase[j] + self.phase[other.perm[j]]) % 4 for j in range(other.dim))
        return MonomialMatrix(perm, phase)

    def scaled(self, k: int) -> "MonomialMatrix":
        """Multiply by ``i^k``."""
        return MonomialMatrix(self.perm, tuple((p + k) % 4 for p in self.phase))

    def is_scalar(self):
        """Return ``k`` if the matrix is ``i^k`` times the identity, else None."""
        if self.perm != tuple(range(self.dim)) or len(set(self.phase)) != 1:
            return None
        return self.phase[0]

    def dense(self):
        n = self.dim
        rows = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            rows[self.perm[j]][j] = GaussianRational.i_power(self.phase[j])
        return tuple(tuple(r) for r in rows)


def monomial_from_dense(a):
    """The MonomialMatrix equal to ``a``, or None if ``a`` is not monomial with unit entries."""
    n = len(a)
    perm, phase = [None] * n, [None] * n
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if not x:
                continue
            k = next((k for k in range(4) if GaussianRational.i_power(k) == x), None)
            if k is None or perm[j] is not None:
                return None
            perm[j], phase[j] = i, k
    if None in perm or sorted(perm) != list(range(n)):
        return None
    return MonomialMatrix(tuple(perm), tuple(phase))


def dense_identity(n: int):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for k in range(p):
            s = ZERO
            for j in range(m):
                if a[i][j] and b[j][k]:
                    s = s + a[i][j] * b[j][k]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def as_dense(m):
    return m.dense() if isinstance(m, MonomialMatrix) else m


def is_zero_matrix(a) -> bool:
    return not any(x for row in a for x in row)


def mat_equal(a, b) -> bool:
    return all(x == y for ra, rb in zip(as_dense(a), as_dense(b)) for x, y in zip(ra, rb))

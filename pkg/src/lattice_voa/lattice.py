"""Exact lattice arithmetic: validation, dual lattice, discriminant group.

Everything here works over ``int`` and ``fractions.Fraction``; no floating
point is used anywhere.  Vectors are coordinate tuples in the fixed lattice
basis, so ``v`` lies in the dual lattice exactly when ``G @ v`` is integral.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import (
    DimensionMismatch,
    NotEven,
    NotInDualLattice,
    NotPositiveDefinite,
    NotSymmetric,
    ParseError,
)

DEFAULT_MAX_RANK = 10

DualVector = tuple  # tuple[Fraction, ...] of lattice-basis coordinates


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """Return ``(diag, U, V)`` with ``U @ A @ V`` diagonal and U, V unimodular.

    ``diag`` is non-negative and each entry divides the next.
    """
    d = [list(map(int, row)) for row in matrix]
    m = len(d)
    n = len(d[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = d[t][t]
            clean = True
            for i in range(t + 1, m):
                q = d[i][t] // p
                if q:
                    d[i] = [x - q * y for x, y in zip(d[i], d[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                clean &= d[i][t] == 0
            for j in range(t + 1, n):
                q = d[t][j] // p
                if q:
                    for row in d:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                clean &= d[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % p),
                None,
            )
            if bad is None:
                break
            d[t] = [x + y for x, y in zip(d[t], d[bad])]
            u[t] = [x + y for x, y in zip(u[t], u[bad])]
        if t < m and t < n and d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    diag = [d[i][i] for i in range(min(m, n))]
    return diag, u, v


def _rational_inverse(matrix):
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def _mat_vec(m, v):
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m)


@dataclass(frozen=True)
class Lattice:
    """A positive-definite even lattice given by its Gram matrix.

    Build instances through :func:`validate_lattice`; the constructor does not
    re-check the invariants.
    """

    gram: tuple
    max_rank: int = field(default=DEFAULT_MAX_RANK, compare=False)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return bareiss_determinant(self.gram)

    @property
    def gram_inverse(self):
        return _gram_inverse(self.gram)

    def pair(self, u, v) -> Fraction:
        return inner_product(self, u, v)

    def __repr__(self):
        return f"Lattice(rank={self.rank}, gram={[list(r) for r in self.gram]})"


@lru_cache(maxsize=None)
def _gram_inverse(gram):
    return _rational_inverse(gram)


def validate_lattice(gram, max_rank: int = DEFAULT_MAX_RANK) -> Lattice:
    """Check that ``gram`` is a symmetric, even, positive-definite integer matrix.

    Raises ParseError for non-matrix or non-integer input, otherwise the
    specific ValidationError subclass naming the first offending entry.
    """
    if not isinstance(gram, (list, tuple)) or not gram:
        raise ParseError("gram must be a non-empty list of rows")
    n = len(gram)
    rows = []
    for i, row in enumerate(gram):
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise ParseError(f"gram must be square: row {i} has wrong length")
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                if isinstance(x, Fraction) and x.denominator == 1:
                    continue
                raise ParseError(f"gram row {i} contains a non-integer entry {x!r}")
        rows.append(tuple(int(x) for x in row))
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"gram[{i}][{j}] = {rows[i][j]} != gram[{j}][{i}] = {rows[j][i]}")
    for i in range(n):
        if rows[i][i] % 2:
            raise NotEven(f"diagonal entry gram[{i}][{i}] = {rows[i][i]} is odd")
    for k in range(1, n + 1):
        minor = bareiss_determinant([r[:k] for r in rows[:k]])
        if minor <= 0:
            raise NotPositiveDefinite(f"leading principal minor of order {k} is {minor}")
    return Lattice(tuple(rows), max_rank)


def _frac(x) -> Fraction:
    """``Fraction(x)`` with plain int parts, also for gmpy2 rationals."""
    x = Fraction(x)
    if type(x.numerator) is int:
        return x
    return Fraction(int(x.numerator), int(x.denominator))


def _as_vector(L: Lattice, v) -> tuple:
    if len(v) != L.rank:
        raise DimensionMismatch(f"expected {L.rank} coordinates, got {len(v)}")
    return tuple(_frac(x) for x in v)


def inner_product(L: Lattice, u, v) -> Fraction:
    """Exact value of ``u^T G v``."""
    if all(type(x) is int for x in u) and all(type(x) is int for x in v):
        if len(u) != L.rank or len(v) != L.rank:
            raise DimensionMismatch(f"expected {L.rank} coordinates, got {len(u)} and {len(v)}")
        G = L.gram
        return Fraction(sum(u[i] * G[i][j] * v[j] for i in range(L.rank) if u[i] for j in range(L.rank) if v[j]))
    u = _as_vector(L, u)
    v = _as_vector(L, v)
    return sum((u[i] * L.gram[i][j] * v[j] for i in range(L.rank) for j in range(L.rank) if u[i] and v[j]), Fraction(0))


def dual_pairing(L: Lattice, v) -> tuple:
    """``G @ v``: the pairings of ``v`` with the basis vectors."""
    return _mat_vec(L.gram, _as_vector(L, v))


def is_in_dual(L: Lattice, v) -> bool:
    return all(x.denominator == 1 for x in dual_pairing(L, v))


def is_in_lattice(L: Lattice, v) -> bool:
    return all(Fraction(x).denominator == 1 for x in _as_vector(L, v))


@dataclass(frozen=True)
class DiscriminantGroup:
    """The finite group L°/L with a canonical representative per coset."""

    lattice: Lattice
    invariant_factors: tuple
    reps: tuple
    # rows of the Smith transform U acting on G @ v, one per nontrivial factor
    _smith_rows: tuple = field(repr=False)
    _smith_back: tuple = field(repr=False)

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def smith_coordinates(self, v) -> tuple:
        L = self.lattice
        y = dual_pairing(L, v)
        if any(x.denominator != 1 for x in y):
            raise NotInDualLattice(f"{tuple(map(str, v))} pairs non-integrally with L")
        return tuple(int(sum(r * x for r, x in zip(row, y))) % d for row, d in zip(self._smith_rows, self.invariant_factors))

    def from_smith(self, s) -> tuple:
        y = [0] * self.lattice.rank
        for col, si in zip(self._smith_back, s):
            for i in range(len(y)):
                y[i] += col[i] * si
        return _mat_vec(self.lattice.gram_inverse, y)

    def canonicalize(self, v) -> tuple:
        return self.from_smith(self.smith_coordinates(v))

    def add(self, u, v) -> tuple:
        return self.canonicalize(tuple(a + b for a, b in zip(u, v)))

    def neg(self, v) -> tuple:
        return self.canonicalize(tuple(-a for a in v))

    def index(self, v) -> int:
        return self._index[self.canonicalize(v)]

    @property
    def _index(self):
        return _rep_index(self)


@lru_cache(maxsize=None)
def _rep_index(D: DiscriminantGroup):
    return {r: i for i, r in enumerate(D.reps)}


@lru_cache(maxsize=None)
def discriminant_group(L: Lattice) -> DiscriminantGroup:
    """Invariant factors and canonical coset representatives of L°/L."""
    diag, u, _ = smith_normal_form(L.gram)
    u_inv = _rational_inverse(u)
    keep = [i for i, d in enumerate(diag) if d != 1]
    factors = tuple(diag[i] for i in keep)
    rows = tuple(tuple(u[i]) for i in keep)
    # columns of U^{-1} for the kept Smith coordinates (integral: U unimodular)
    back = tuple(tuple(int(u_inv[r][i]) for r in range(L.rank)) for i in keep)
    proto = DiscriminantGroup(L, factors, (), rows, back)
    reps = tuple(proto.from_smith(s) for s in itertools.product(*(range(d) for d in factors)))
    return DiscriminantGroup(L, factors, reps, rows, back)


def canonicalize_coset(L: Lattice, v) -> tuple:
    """Canonical representative of ``v + L``; raises NotInDualLattice."""
    return discriminant_group(L).canonicalize(_as_vector(L, v))

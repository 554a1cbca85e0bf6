"""Fock states for the untwisted and the twisted Heisenberg algebra.

A basis state is a pair ``(monomial, base)``.  The monomial is a sorted tuple
of ``(n2, j)`` standing for the creation operator ``a_j(-n2/2)`` on lattice
basis vector ``a_j``; ``n2`` is even in untwisted sectors and odd in twisted
ones.  The base is the lattice point ``mu`` (a tuple of rationals) of
``e^mu`` for untwisted states and an index into T_chi for twisted states.

Modes satisfy ``[a_i(m), a_j(n)] = m G_ij delta_{m+n,0}``.
"""

from __future__ import annotations

import itertools
from bisect import insort

from ..errors import ModeParityMismatch
from ..lattice import Lattice, inner_product
from ._numbers import Q


class FockVector:
    """Finite linear combination of basis states with exact coefficients."""

    __slots__ = ("terms", "twisted")

    def __init__(self, terms=None, twisted: bool = False):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self.twisted = twisted

    @classmethod
    def basis(cls, monomial, base, twisted=None, coef=1):
        if twisted is None:
            twisted = isinstance(base, int)
        return cls({(tuple(sorted(monomial)), base): Q(coef)}, twisted)

    @classmethod
    def lattice_vector(cls, mu, coef=1):
        return cls.basis((), tuple(Q(x) for x in mu), False, coef)

    @classmethod
    def twisted_ground(cls, t: int = 0):
        return cls.basis((), t, True)

    def copy(self):
        return FockVector(dict(self.terms), self.twisted)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self - other).is_zero()

    def is_zero(self):
        return not any(self.terms.values())

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FockVector(out, self.twisted or other.twisted)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        if not c:
            return FockVector({}, self.twisted)
        return FockVector({k: v * c for k, v in self.terms.items()}, self.twisted)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def bases(self):
        return {b for _, b in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (mono, base), c in sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), repr(kv[0]))):
            ops = "".join(f"a{j}({Q(-n2, 2)})" for n2, j in mono)
            b = f"t{base}" if self.twisted else "e^(" + ",".join(map(str, base)) + ")"
            parts.append(f"{c}*{ops}{b}")
        return " + ".join(parts)


def monomial_weight(mono) -> Q:
    return Q(sum(n2 for n2, _ in mono), 2)


def state_weight(L: Lattice, key, twisted: bool) -> Q:
    """Conformal weight; twisted ground states sit at ``rank/16``."""
    mono, base = key
    if twisted:
        return monomial_weight(mono) + Q(L.rank, 16)
    return monomial_weight(mono) + inner_product(L, base, base) / 2


def vector_weights(L: Lattice, v: FockVector) -> set:
    return {state_weight(L, k, v.twisted) for k in v.terms}


def _as_half(m) -> Q:
    m = Q(m)
    if (2 * m).denominator != 1:
        raise ModeParityMismatch(f"mode {m} is not in (1/2)Z")
    return m


# -- raw dict kernels shared with the operator code --------------------------


def raw_create(vec: dict, j: int, n2: int, coef, out: dict | None = None) -> dict:
    """``out += coef * a_j(-n2/2) vec`` on raw ``{(mono, base): c}`` dicts."""
    out = {} if out is None else out
    for (mono, base), c in vec.items():
        new = list(mono)
        insort(new, (n2, j))
        key = (tuple(new), base)
        out[key] = out.get(key, 0) + c * coef
    return out


def raw_annihilate(G, vec: dict, j: int, n2: int, coef, out: dict | None = None) -> dict:
    """``out += coef * a_j(n2/2) vec`` for ``n2 > 0`` by commuting to the right."""
    out = {} if out is None else out
    m = Q(n2, 2)
    for (mono, base), c in vec.items():
        prev = None
        for pos, (n, i) in enumerate(mono):
            if n != n2 or (n, i) == prev or not G[j][i]:
                prev = (n, i)
                continue
            prev = (n, i)
            count = sum(1 for f in mono if f == (n, i))
            key = (mono[:pos] + mono[pos + 1:], base)
            out[key] = out.get(key, 0) + c * coef * m * G[j][i] * count
    return out


def raw_zero_mode(L: Lattice, vec: dict, h, coef, out: dict | None = None) -> dict:
    """``out += coef * h(0) vec`` on untwisted states: multiplication by ``<h, mu>``."""
    out = {} if out is None else out
    for (mono, base), c in vec.items():
        x = inner_product(L, h, base)
        if x:
            key = (mono, base)
            out[key] = out.get(key, 0) + c * coef * x
    return out


def raw_mode(L: Lattice, vec: dict, h, m, coef=1, out: dict | None = None) -> dict:
    """``out += coef * h(m) vec`` for a direction ``h`` in lattice coordinates."""
    out = {} if out is None else out
    n2 = int(2 * m)
    if n2 == 0:
        return raw_zero_mode(L, vec, h, coef, out)
    for j, hj in enumerate(h):
        if not hj:
            continue
        if n2 < 0:
            raw_create(vec, j, -n2, coef * hj, out)
        else:
            raw_annihilate(L.gram, vec, j, n2, coef * hj, out)
    return out


def clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def heisenberg_apply(L: Lattice, h, m, v: FockVector) -> FockVector:
    """``h(m) v`` with ``h`` in lattice coordinates.

    Integer modes act on untwisted vectors and half-odd modes on twisted ones.
    """
    m = _as_half(m)
    half_odd = m.denominator == 2
    if half_odd != v.twisted:
        kind = "twisted" if v.twisted else "untwisted"
        raise ModeParityMismatch(f"mode {m} cannot act on a {kind} vector")
    h = tuple(Q(x) for x in h)
    return FockVector(clean(raw_mode(L, v.terms, h, m)), v.twisted)


def dual_basis(L: Lattice):
    """``a_j^*`` with ``<a_i, a_j^*> = delta_ij``: the columns of ``G^{-1}``."""
    Gi = L.gram_inverse
    return tuple(tuple(Gi[k][j] for k in range(L.rank)) for j in range(L.rank))


def unit(L: Lattice, j: int):
    return tuple(Q(int(i == j)) for i in range(L.rank))


def virasoro_L_minus1(L: Lattice, v: FockVector) -> FockVector:
    """``L(-1) = sum_{m>=0} sum_j a_j(-1-m) a_j^*(m)`` on untwisted vectors."""
    if v.twisted:
        raise ModeParityMismatch("L(-1) is only implemented on untwisted vectors")
    out = {}
    top = max((max((n2 for n2, _ in mono), default=0) for mono, _ in v.terms), default=0) // 2
    for j, dual in enumerate(dual_basis(L)):
        for m in range(0, top + 1):
            step = raw_mode(L, v.terms, dual, m)
            if step:
                raw_create(clean(step), j, 2 * (1 + m), 1, out)
    return FockVector(clean(out), False)


def monomials_up_to(rank: int, max_weight, twisted: bool):
    """All monomials of mode weight ``<= max_weight`` over the lattice basis."""
    top2 = int(2 * Q(max_weight))
    modes = [n for n in range(top2, 0, -1) if (n % 2 == 1) == twisted]
    labelled = tuple((n, j) for n in modes for j in range(rank))
    out = []

    def rec(start, remaining, acc):
        out.append(tuple(sorted(acc)))
        for i in range(start, len(labelled)):
            n, j = labelled[i]
            if n <= remaining:
                acc.append((n, j))
                rec(i, remaining - n, acc)
                acc.pop()

    rec(0, top2, [])
    return sorted(set(out), key=lambda m: (monomial_weight(m), m))


def twisted_states(L: Lattice, dim: int, max_weight) -> list:
    """Basis of twisted states with mode weight ``<= max_weight`` (above the ground)."""
    return [FockVector.basis(m, t, True) for m in monomials_up_to(L.rank, max_weight, True) for t in range(dim)]


def untwisted_states(L: Lattice, coset, max_weight, radius: int = 3) -> list:
    """Monomial basis of ``V_{L+coset}`` up to conformal weight ``max_weight``."""
    coset = tuple(Q(x) for x in coset)
    out = []
    for beta in itertools.product(range(-radius, radius + 1), repeat=L.rank):
        mu = tuple(c + b for c, b in zip(coset, beta))
        w0 = inner_product(L, mu, mu) / 2
        if w0 > max_weight:
            continue
        for m in monomials_up_to(L.rank, max_weight - w0, False):
            out.append(FockVector.basis(m, mu, False))
    return sorted(out, key=lambda v: (min(vector_weights(L, v)), repr(v)))

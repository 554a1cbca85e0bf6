"""The finite group L^/K, its central characters and the modules T_chi.

Elements of L^/K are pairs ``(s, u)`` with ``s`` the exponent of kappa and
``u`` in L/2L, multiplied by ``(s1, u1)(s2, u2) = (s1 + s2 + u1^T B u2, u1 + u2)``
where ``B`` is the exponent matrix of the cocycle.  The lattice element
``e_a`` maps to ``(0, a mod 2)``; this kills exactly ``K = {e_{2b}}``.

Character values are fourth roots of unity and are stored as exponents of
``i`` (so ``kappa -> -1`` is exponent 2).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import isqrt

from .cocycle import BilinearCocycle, build_cocycle
from .errors import NoIntertwiner, NonUniqueSolution, NotInDualLattice, RankTooLarge
from .exact import ZERO, GaussianRational, MonomialMatrix, matmul, monomial_from_dense, scale
from .lattice import Lattice, dual_pairing, inner_product, is_in_dual


# -- F2 linear algebra on coordinate tuples ---------------------------------


def _f2_nullspace(rows, d):
    """Basis of ``{x in F2^d : rows @ x = 0}`` read off the reduced echelon form."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(d):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                m[i] = [(a + b) & 1 for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * d
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = m[i][f]
        basis.append(tuple(x))
    return tuple(basis)


class _F2Span:
    """Coordinates with respect to a list of independent F2 vectors."""

    def __init__(self, basis, d):
        self.basis = tuple(basis)
        self.d = d
        self._rows = []  # (pivot, reduced vector, combination mask)
        for k, v in enumerate(self.basis):
            vec = list(v)
            comb = [0] * len(self.basis)
            comb[k] = 1
            for piv, rv, rc in self._rows:
                if vec[piv]:
                    vec = [(a + b) & 1 for a, b in zip(vec, rv)]
                    comb = [(a + b) & 1 for a, b in zip(comb, rc)]
            piv = next((i for i, x in enumerate(vec) if x), None)
            if piv is None:
                raise ValueError("basis vectors are linearly dependent over F2")
            self._rows.append((piv, vec, comb))

    def coords(self, v):
        vec = [int(x) & 1 for x in v]
        comb = [0] * len(self.basis)
        for piv, rv, rc in self._rows:
            if vec[piv]:
                vec = [(a + b) & 1 for a, b in zip(vec, rv)]
                comb = [(a + b) & 1 for a, b in zip(comb, rc)]
        if any(vec):
            return None
        return tuple(comb)

    def contains(self, v) -> bool:
        return self.coords(v) is not None


# -- the group --------------------------------------------------------------


@dataclass(frozen=True, order=True)
class QuotientGroupElement:
    sign: int
    vec: tuple

    def __repr__(self):
        return f"({self.sign}, {''.join(map(str, self.vec))})"


@dataclass(frozen=True)
class CenterData:
    radical_basis: tuple
    center_order: int


class QuotientGroup:
    """The group L^/K of order ``2^(d+1)``."""

    def __init__(self, lattice: Lattice, cocycle: BilinearCocycle):
        self.lattice = lattice
        self.cocycle = cocycle
        self.rank = lattice.rank

    def __repr__(self):
        return f"QuotientGroup(rank={self.rank}, order={self.order})"

    @property
    def order(self) -> int:
        return 2 ** (self.rank + 1)

    @property
    def identity(self) -> QuotientGroupElement:
        return QuotientGroupElement(0, (0,) * self.rank)

    @property
    def kappa(self) -> QuotientGroupElement:
        return QuotientGroupElement(1, (0,) * self.rank)

    @property
    def generators(self) -> tuple:
        """``e_{a_i} K`` for the lattice basis vectors ``a_i``."""
        return tuple(self.lift(tuple(int(i == j) for j in range(self.rank))) for i in range(self.rank))

    def lift(self, alpha) -> QuotientGroupElement:
        """Image of ``e_alpha`` for an integer vector ``alpha``."""
        return QuotientGroupElement(0, tuple(int(a) & 1 for a in alpha))

    def mul(self, x: QuotientGroupElement, y: QuotientGroupElement) -> QuotientGroupElement:
        s = (x.sign + y.sign + self.cocycle.exponent(x.vec, y.vec)) & 1
        return QuotientGroupElement(s, tuple(a ^ b for a, b in zip(x.vec, y.vec)))

    def inv(self, x: QuotientGroupElement) -> QuotientGroupElement:
        # x^2 = kappa^{B(u,u)}, so x^{-1} = kappa^{B(u,u)} x
        return QuotientGroupElement((x.sign + self.cocycle.exponent(x.vec, x.vec)) & 1, x.vec)

    def commutator(self, x, y) -> QuotientGroupElement:
        return self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))

    def elements(self):
        for s in (0, 1):
            for u in itertools.product((0, 1), repeat=self.rank):
                yield QuotientGroupElement(s, u)

    def form(self, u, v) -> int:
        """``<u, v> mod 2`` on L/2L; the commutator pairing."""
        G = self.lattice.gram
        return sum(G[i][j] for i in range(self.rank) if u[i] for j in range(self.rank) if v[j]) & 1

    @cached_property
    def center(self) -> CenterData:
        G = self.lattice.gram
        rows = [[x & 1 for x in row] for row in G]
        basis = _f2_nullspace(rows, self.rank)
        return CenterData(basis, 2 * 2 ** len(basis))

    @cached_property
    def _radical_span(self):
        return _F2Span(self.center.radical_basis, self.rank)

    def is_central(self, x: QuotientGroupElement) -> bool:
        return self._radical_span.contains(x.vec)

    @cached_property
    def characters(self) -> tuple:
        return _enumerate_characters(self)

    def _decompose(self, span: _F2Span, x: QuotientGroupElement):
        """Write ``x = kappa^t * prod_i b_i^{c_i}`` over the basis of ``span``."""
        c = span.coords(x.vec)
        if c is None:
            return None
        acc = self.identity
        for ci, b in zip(c, span.basis):
            if ci:
                acc = self.mul(acc, QuotientGroupElement(0, b))
        return (x.sign - acc.sign) & 1, c


def build_quotient_group(L: Lattice, c: BilinearCocycle | None = None) -> QuotientGroup:
    # the cap is checked outside the cache: max_rank takes no part in Lattice equality
    if L.rank > L.max_rank:
        raise RankTooLarge(f"rank {L.rank} exceeds the cap {L.max_rank}")
    return _build_quotient_group(L, c)


@lru_cache(maxsize=None)
def _build_quotient_group(L: Lattice, c: BilinearCocycle | None) -> QuotientGroup:
    return QuotientGroup(L, c if c is not None else build_cocycle(L))


# -- central characters -----------------------------------------------------


@dataclass(frozen=True)
class CentralCharacter:
    """A character of Z(L^/K) sending kappa to -1.

    ``exponents[i]`` is the i-exponent of the value on the i-th radical basis
    element ``(0, r_i)``.
    """

    id: int
    exponents: tuple
    group: QuotientGroup = field(compare=False, repr=False, hash=False)

    @property
    def values(self) -> dict:
        out = {self.group.kappa: GaussianRational(-1)}
        for r, k in zip(self.group.center.radical_basis, self.exponents):
            out[QuotientGroupElement(0, r)] = GaussianRational.i_power(k)
        return out

    def exponent_of(self, x: QuotientGroupElement) -> int:
        g = self.group
        dec = g._decompose(g._radical_span, x)
        if dec is None:
            raise ValueError(f"{x!r} is not central")
        t, c = dec
        return (2 * t + sum(k for ci, k in zip(c, self.exponents) if ci)) % 4

    def __call__(self, x: QuotientGroupElement) -> GaussianRational:
        return GaussianRational.i_power(self.exponent_of(x))


def _square_exponent(g: QuotientGroup, u) -> int:
    """``(0,u)^2 = kappa^{B(u,u)}``; returns ``B(u,u) mod 2``."""
    return g.cocycle.exponent(u, u)


def _enumerate_characters(g: QuotientGroup):
    choices = [(1, 3) if _square_exponent(g, r) else (0, 2) for r in g.center.radical_basis]
    return tuple(CentralCharacter(i, exps, g) for i, exps in enumerate(itertools.product(*choices)))


def enumerate_central_characters(g: QuotientGroup) -> list:
    return list(g.characters)


def _character_by_exponents(g: QuotientGroup, exps) -> CentralCharacter:
    exps = tuple(e % 4 for e in exps)
    for ch in g.characters:
        if ch.exponents == exps:
            return ch
    raise AssertionError(f"no central character with exponents {exps}")


def _lift01(vec):
    return tuple(int(x) for x in vec)


def twist_character(chi: CentralCharacter, lam) -> CentralCharacter:
    """``chi^(lam)(a) = (-1)^<lam, a> chi(a)`` on the center."""
    g = chi.group
    L = g.lattice
    lam = tuple(Fraction(x) for x in lam)
    if not is_in_dual(L, lam):
        raise NotInDualLattice(f"{tuple(map(str, lam))} is not in the dual lattice")
    exps = [k + 2 * (int(inner_product(L, lam, _lift01(r))) & 1) for r, k in zip(g.center.radical_basis, chi.exponents)]
    return _character_by_exponents(g, exps)


def contragredient_character(chi: CentralCharacter) -> CentralCharacter:
    """``chi'(a) = (-1)^{<a, a>/2} chi(a)`` on the center."""
    g = chi.group
    L = g.lattice
    exps = []
    for r, k in zip(g.center.radical_basis, chi.exponents):
        half_norm = int(inner_product(L, _lift01(r), _lift01(r))) // 2
        exps.append(k + 2 * (half_norm & 1))
    return _character_by_exponents(g, exps)


# -- explicit modules T_chi -------------------------------------------------


@dataclass
class SectorRep:
    """The irreducible L^/K-module T_chi as monomial matrices over Z[i]."""

    group: QuotientGroup
    character: CentralCharacter
    abelian_basis: tuple  # basis of the maximal isotropic W containing the radical
    abelian_exponents: tuple  # psi on (0, w) for each basis vector of W
    coset_basis: tuple  # basis of a complement C of W in F2^d
    _w_span: _F2Span = field(repr=False)
    _full_span: _F2Span = field(repr=False)
    _matrix_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return 2 ** len(self.coset_basis)

    @cached_property
    def _coset_vectors(self):
        d = self.group.rank
        out = []
        for coeffs in itertools.product((0, 1), repeat=len(self.coset_basis)):
            v = [0] * d
            for ci, b in zip(coeffs, self.coset_basis):
                if ci:
                    v = [x ^ y for x, y in zip(v, b)]
            out.append(tuple(v))
        return tuple(out)

    def _coset_index(self, u) -> int:
        c = self._full_span.coords(u)
        tail = c[len(self.abelian_basis):]
        return int("".join(map(str, tail)), 2) if tail else 0

    def _psi(self, x: QuotientGroupElement) -> int:
        t, c = self.group._decompose(self._w_span, x)
        return (2 * t + sum(k for ci, k in zip(c, self.abelian_exponents) if ci)) % 4

    def matrix(self, x: QuotientGroupElement) -> MonomialMatrix:
        """Induced action: ``rho(x) e_c = psi(t_{c'}^{-1} x t_c) e_{c'}``."""
        if x in self._matrix_cache:
            return self._matrix_cache[x]
        g = self.group
        perm, phase = [], []
        for c in self._coset_vectors:
            xt = g.mul(x, QuotientGroupElement(0, c))
            j = self._coset_index(xt.vec)
            t_inv = g.inv(QuotientGroupElement(0, self._coset_vectors[j]))
            perm.append(j)
            phase.append(self._psi(g.mul(t_inv, xt)))
        out = self._matrix_cache[x] = MonomialMatrix(tuple(perm), tuple(phase))
        return out

    def of_lattice(self, alpha) -> MonomialMatrix:
        """Action of ``e_alpha`` for an integer vector ``alpha``."""
        return self.matrix(self.group.lift(alpha))

    @property
    def matrices(self) -> dict:
        g = self.group
        out = {g.kappa: self.matrix(g.kappa)}
        for e in g.generators:
            out[e] = self.matrix(e)
        return out

    def check_invariants(self) -> list:
        """Return a list of violated invariants (empty when all hold)."""
        g = self.group
        problems = []
        if self.matrix(g.kappa).is_scalar() != 2:
            problems.append("kappa does not act as -1")
        for r in g.center.radical_basis:
            z = QuotientGroupElement(0, r)
            if self.matrix(z).is_scalar() != self.character.exponent_of(z):
                problems.append(f"center element {z!r} does not act by chi")
        gens = [g.kappa, *g.generators]
        for x in gens:
            for y in gens:
                if self.matrix(x) @ self.matrix(y) != self.matrix(g.mul(x, y)):
                    problems.append(f"relation fails for {x!r}*{y!r}")
        expected = isqrt(2**g.rank // 2 ** len(g.center.radical_basis))
        if self.dim != expected or self.dim**2 * 2 ** len(g.center.radical_basis) != 2**g.rank:
            problems.append(f"dimension {self.dim} != sqrt(2^d/|R/2L|) = {expected}")
        if commutant_dimension(self, self) != 1:
            problems.append("module is not irreducible")
        return problems


def _maximal_isotropic(g: QuotientGroup):
    d = g.rank
    basis = list(g.center.radical_basis)
    for bits in range(1, 2**d):
        v = tuple((bits >> (d - 1 - i)) & 1 for i in range(d))
        if _F2Span(basis, d).contains(v) if basis else False:
            continue
        if all(g.form(v, w) == 0 for w in basis):
            basis.append(v)
    return tuple(basis)


def _complement(basis, d):
    chosen = list(basis)
    extra = []
    for i in range(d):
        e = tuple(int(i == j) for j in range(d))
        if chosen and _F2Span(chosen, d).contains(e):
            continue
        chosen.append(e)
        extra.append(e)
    return tuple(extra)


@lru_cache(maxsize=None)
def _rep_skeleton(g: QuotientGroup):
    W = _maximal_isotropic(g)
    C = _complement(W, g.rank)
    return W, C


@lru_cache(maxsize=None)
def build_sector_rep(g: QuotientGroup, chi: CentralCharacter) -> SectorRep:
    """Induce chi, extended to a maximal abelian subgroup, up to L^/K."""
    W, C = _rep_skeleton(g)
    k = len(g.center.radical_basis)
    extension = tuple(1 if _square_exponent(g, w) else 0 for w in W[k:])
    rep = SectorRep(g, chi, W, tuple(chi.exponents) + extension, C, _F2Span(W, g.rank) if W else _F2Span((), g.rank), _F2Span(W + C, g.rank))
    problems = rep.check_invariants()
    if problems:
        raise AssertionError(f"T_chi construction failed: {problems}")
    return rep


# -- intertwiners -----------------------------------------------------------


def _solve_monomial(sources, targets, n):
    """Basis of ``{F : F @ S_k = T_k @ F for all k}`` for monomial S_k, T_k.

    The condition reads ``F[pT(a), pS(b)] = i^{phT(a) - phS(b)} F[a, b]``, so the
    solution space has one dimension per phase-consistent orbit of entries.
    """
    seen = {}
    solutions = []
    for start in itertools.product(range(n), repeat=2):
        if start in seen:
            continue
        phase = {start: 0}
        queue = deque([start])
        consistent = True
        while queue:
            a, b = node = queue.popleft()
            for S, T in zip(sources, targets):
                nxt = (T.perm[a], S.perm[b])
                p = (phase[node] + T.phase[a] - S.phase[b]) % 4
                if nxt in phase:
                    consistent &= phase[nxt] == p
                else:
                    phase[nxt] = p
                    queue.append(nxt)
        for node in phase:
            seen[node] = True
        if consistent:
            rows = [[ZERO] * n for _ in range(n)]
            for (a, b), p in phase.items():
                rows[a][b] = GaussianRational.i_power(p)
            solutions.append(tuple(tuple(r) for r in rows))
    return solutions


def commutant_dimension(rep_a: SectorRep, rep_b: SectorRep) -> int:
    g = rep_a.group
    gens = [g.kappa, *g.generators]
    return len(_solve_monomial([rep_a.matrix(x) for x in gens], [rep_b.matrix(x) for x in gens], rep_a.dim))


def sigma_sign(L: Lattice, lam, x: QuotientGroupElement) -> int:
    """i-exponent (0 or 2) of ``(-1)^<lam, x-bar>``."""
    return 2 * (int(inner_product(L, lam, _lift01(x.vec))) & 1)


def solve_intertwiner(g: QuotientGroup, chi: CentralCharacter, lam):
    """The isomorphism ``f: T_chi o sigma_lam -> T_{chi^(lam)}``.

    Normalized so that its first nonzero entry in row-major order is 1.
    """
    L = g.lattice
    lam = tuple(Fraction(x) for x in lam)
    target_chi = twist_character(chi, lam)
    src, tgt = build_sector_rep(g, chi), build_sector_rep(g, target_chi)
    gens = [g.kappa, *g.generators]
    sources = [src.matrix(x).scaled(sigma_sign(L, lam, x)) for x in gens]
    targets = [tgt.matrix(x) for x in gens]
    sols = _solve_monomial(sources, targets, src.dim)
    if not sols:
        raise NoIntertwiner(f"T_chi o sigma_lam is not isomorphic to T_chi^(lam) for chi={chi.id}")
    if len(sols) > 1:
        raise NonUniqueSolution(f"{len(sols)}-dimensional space of intertwiners")
    return sols[0]


def eta_map(g: QuotientGroup, chi: CentralCharacter, lam, alpha):
    """``eta_{lam+alpha} = (-1)^<alpha, lam> e_alpha o f : T_chi -> T_{chi^(lam)}``."""
    L = g.lattice
    lam = tuple(Fraction(x) for x in lam)
    f = solve_intertwiner(g, chi, lam)
    target = build_sector_rep(g, twist_character(chi, lam))
    e_alpha = target.of_lattice(alpha).dense()
    sign = -1 if int(inner_product(L, alpha, lam)) & 1 else 1
    return scale(sign, matmul(e_alpha, f))


def twisted_summary(L: Lattice) -> dict:
    g = build_quotient_group(L)
    chars = g.characters
    dims = sorted({build_sector_rep(g, ch).dim for ch in chars})
    return {
        "group_order": g.order,
        "center_order": g.center.center_order,
        "radical_dimension": len(g.center.radical_basis),
        "num_characters": len(chars),
        "dim_T_chi": dims[0] if len(dims) == 1 else dims,
    }


# -- matrix-level relation checks -------------------------------------------


@dataclass
class RelationReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **info):
        self.checked += 1
        if not ok:
            self.failures.append(info)

    def as_dict(self):
        return {"name": self.name, "checked": self.checked, "passed": self.passed, "failures": self.failures}


def _box(d, radius):
    return list(itertools.product(range(-radius, radius + 1), repeat=d))


def _parity_sign(x) -> int:
    return -1 if int(x) & 1 else 1


def check_commutator_relation(L: Lattice, radius: int = 1) -> RelationReport:
    """``e_a e_b = (-1)^<a,b> e_b e_a`` on the group algebra and on every T_chi.

    On the group algebra ``e_a`` acts by ``e^g -> eps(a, g) e^{a+g}``; the relation
    is tested on all basis vectors ``e^g`` with ``g`` in the box of the given radius.
    """
    g = build_quotient_group(L)
    eps = g.cocycle
    rep = RelationReport("commutator relation")
    box = _box(L.rank, radius)
    for a in box:
        for b in box:
            sign = _parity_sign(inner_product(L, a, b))
            for v in box:
                ab = eps(b, v) * eps(a, [x + y for x, y in zip(b, v)])
                ba = eps(a, v) * eps(b, [x + y for x, y in zip(a, v)])
                rep.record(ab == sign * ba, realization="group algebra", a=a, b=b, on=v)
            for ch in g.characters:
                T = build_sector_rep(g, ch)
                lhs = T.of_lattice(a) @ T.of_lattice(b)
                rhs = (T.of_lattice(b) @ T.of_lattice(a)).scaled(0 if sign == 1 else 2)
                rep.record(lhs == rhs, realization=f"T_chi[{ch.id}]", a=a, b=b)
    return rep


def _dual_reps(L: Lattice):
    from .lattice import discriminant_group

    return discriminant_group(L).reps


def check_intertwiner_commutation(L: Lattice, radius: int = 1, lambdas=None) -> RelationReport:
    """``e_a o f = (-1)^<a,lam> f o e_a`` for the solved intertwiners."""
    g = build_quotient_group(L)
    rep = RelationReport("intertwiner commutation")
    for lam in lambdas if lambdas is not None else _dual_reps(L):
        for ch in g.characters:
            f = solve_intertwiner(g, ch, lam)
            src = build_sector_rep(g, ch)
            tgt = build_sector_rep(g, twist_character(ch, lam))
            for a in _box(L.rank, radius):
                sign = _parity_sign(inner_product(L, a, lam))
                lhs = matmul(tgt.of_lattice(a).dense(), f)
                rhs = scale(sign, matmul(f, src.of_lattice(a).dense()))
                rep.record(lhs == rhs, chi=ch.id, lam=[str(x) for x in lam], a=a)
    return rep


def extended_epsilon(L: Lattice, alpha, lam, beta) -> int:
    """``eps(alpha, lam + beta) = eps(alpha, beta) (-1)^<alpha, lam>``.

    This is the cocycle extended to pairs in L x (lam + L) used by the
    untwisted module ``V_{L+lam}``; lam is the fixed coset representative.
    """
    c = build_quotient_group(L).cocycle
    return c(alpha, beta) * _parity_sign(inner_product(L, alpha, lam))


def check_eta_relations(L: Lattice, radius: int = 1, lambdas=None) -> RelationReport:
    """Both commutation relations of the eta maps.

    For ``gam = lam + beta``: ``e_a o eta_gam = (-1)^<a,gam> eta_gam o e_a`` and
    ``e_a o eta_gam = eps(a, gam) eta_{gam+a}``.  The eta maps are built here
    from one solved intertwiner per ``(lam, chi)``; the definition is the one in
    :func:`eta_map`, which the first beta cross-checks.
    """
    g = build_quotient_group(L)
    rep = RelationReport("eta relations")
    box = _box(L.rank, radius)
    for lam in lambdas if lambdas is not None else _dual_reps(L):
        lam_s = [str(x) for x in lam]
        for ch in g.characters:
            src = build_sector_rep(g, ch)
            tgt = build_sector_rep(g, twist_character(ch, lam))
            f = monomial_from_dense(solve_intertwiner(g, ch, lam))
            if f is None:
                raise AssertionError("intertwiner between monomial modules is not monomial")

            lam_pairing = [int(x) for x in dual_pairing(L, lam)]

            def lam_parity(v):
                return sum(a * b for a, b in zip(v, lam_pairing)) & 1

            def eta(beta):
                return (tgt.of_lattice(beta) @ f).scaled(2 * lam_parity(beta))

            rep.record(eta(box[0]).dense() == eta_map(g, ch, lam, box[0]), relation="definition", chi=ch.id, lam=lam_s)
            for beta in box:
                e = eta(beta)
                for a in box:
                    lhs = tgt.of_lattice(a) @ e
                    # <a, lam + beta> mod 2
                    s1 = 2 * ((lam_parity(a) + int(inner_product(L, a, beta))) & 1)
                    rep.record(lhs == (e @ src.of_lattice(a)).scaled(s1), relation="sign", chi=ch.id, lam=lam_s, beta=beta, a=a)
                    shifted = eta(tuple(x + y for x, y in zip(beta, a)))
                    s2 = 0 if extended_epsilon(L, a, lam, beta) == 1 else 2
                    rep.record(lhs == shifted.scaled(s2), relation="shift", chi=ch.id, lam=lam_s, beta=beta, a=a)
    return rep


__all__ = [
    "CenterData",
    "CentralCharacter",
    "QuotientGroup",
    "QuotientGroupElement",
    "SectorRep",
    "build_quotient_group",
    "build_sector_rep",
    "commutant_dimension",
    "contragredient_character",
    "enumerate_central_characters",
    "eta_map",
    "solve_intertwiner",
    "twist_character",
    "twisted_summary",
    "RelationReport",
    "check_commutator_relation",
    "check_eta_relations",
    "check_intertwiner_commutation",
    "extended_epsilon",
]

"""Twisted vertex operators on M(1)(theta) and their lattice intertwiners.

For ``v = a_{j1}(-n1) ... a_{jk}(-nk) e^mu`` the operator ``W(v, z)`` is the
normal-ordered product of the fields ``(1/(n-1)!) (d/dz)^(n-1) a_j(z)`` with

    Y(e^mu, z) = 2^(-<mu,mu>) z^(-<mu,mu>/2) E^-(mu, z) E^+(mu, z),
    E^-(mu, z) = exp(sum_{n>0} mu(-n) z^n / n),
    E^+(mu, z) = exp(-sum_{n>0} mu(n) z^(-n) / n),

``n`` running over positive half-odd integers.  The full operator is
``Y(v, z) = W(exp(Delta_z) v, z)``.  Every routine here returns the action on a
single twisted state, truncated to z-exponents ``<= max_exp``; the powers of 2
are carried separately as ``TruncatedSeries.log2_prefactor``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from ..errors import InhomogeneousInput, WindowTooSmall
from ..exact import GaussianRational, MonomialMatrix, as_dense, matmul, scale
from ..lattice import Lattice, inner_product
from ..twisted import (
    build_quotient_group,
    build_sector_rep,
    extended_epsilon,
    solve_intertwiner,
    twist_character,
)
from ._numbers import Q
from .series import TruncatedSeries, binom, delta_coefficients
from .space import (
    FockVector,
    clean,
    dual_basis,
    raw_annihilate,
    raw_create,
    raw_mode,
    unit,
    vector_weights,
)

# a "state" below is a dict exponent -> raw vector dict {(mono, base): coef}


def _add_into(state, e, raw):
    if not raw:
        return
    slot = state.setdefault(e, {})
    for k, v in raw.items():
        slot[k] = slot.get(k, 0) + v


def _clean_state(state):
    out = {}
    for e, raw in state.items():
        r = clean(raw)
        if r:
            out[e] = r
    return out


def _top_mode2(raw) -> int:
    return max((max((n2 for n2, _ in mono), default=0) for mono, _ in raw), default=0)


def _modes2(twisted: bool, upto2: int):
    start = 1 if twisted else 2
    return range(start, upto2 + 1, 2)


def _exp_plus(L, state, mu, twisted):
    """Apply ``exp(-sum_{n>0} mu(n) z^(-n) / n)``; terminates on Fock states."""
    for n2 in _modes2(twisted, max((_top_mode2(r) for r in state.values()), default=0)):
        n = Q(n2, 2)
        new = {}
        for e, raw in state.items():
            term, k = raw, 0
            while term:
                _add_into(new, e - n * k, term)
                k += 1
                term = clean(raw_mode(L, term, mu, n, Q(-1) / (n * k)))
        state = _clean_state(new)
    return state


@lru_cache(maxsize=None)
def _exp_minus_table(L, mu, twisted, limit):
    """Terms ``(exponent, creation monomial, coefficient)`` of ``E^-(mu, z)`` up to ``limit``."""
    state = {Q(0): {((), None): Q(1)}}
    n2 = 1 if twisted else 2
    while Q(n2, 2) <= limit:
        n = Q(n2, 2)
        new = {}
        for e, raw in state.items():
            term, k = raw, 0
            while term and e + n * k <= limit:
                _add_into(new, e + n * k, term)
                k += 1
                term = clean(raw_mode(L, term, mu, -n, Q(1) / (n * k)))
        state = _clean_state(new)
        n2 += 2
    return tuple(sorted((e, mono, c) for e, raw in state.items() for (mono, _), c in raw.items()))


def _exp_minus(L, state, mu, twisted, limit):
    """Apply ``exp(sum_{n>0} mu(-n) z^n / n)`` keeping exponents ``<= limit``."""
    if not any(mu) or not state:
        return {e: r for e, r in state.items() if e <= limit}
    table = _exp_minus_table(L, mu, twisted, math.ceil(limit - min(state)))
    new = {}
    for e0, raw in state.items():
        for de, delta, c in table:
            e = e0 + de
            if e > limit:
                break
            slot = new.setdefault(e, {})
            for (mono, base), x in raw.items():
                key = (tuple(sorted(mono + delta)) if delta else mono, base)
                slot[key] = slot.get(key, 0) + x * c
    return _clean_state(new)


def _field_annihilation(L, state, j, order):
    """Positive-mode part of ``(1/order!) (d/dz)^order a_j(z)``."""
    new = {}
    for e, raw in state.items():
        for n2 in _modes2(True, _top_mode2(raw)):
            m = Q(n2, 2)
            c = binom(-m - 1, order)
            _add_into(new, e - m - 1 - order, clean(raw_annihilate(L.gram, raw, j, n2, c)))
    return _clean_state(new)


def _field_creation(L, state, j, order, limit):
    """Negative-mode part of the same derivative field, exponents ``<= limit``."""
    new = {}
    for e, raw in state.items():
        n2 = 1
        while e + Q(n2, 2) - 1 - order <= limit:
            p = Q(n2, 2)
            _add_into(new, e + p - 1 - order, raw_create(raw, j, n2, binom(p - 1, order)))
            n2 += 2
    return _clean_state(new)


def _creation_min(order) -> Q:
    return Q(-1, 2) - order


def _w_monomial(L, mono, mu, w_raw, max_exp):
    """``W(a(-n1)...a(-nk) e^mu, z) w`` without the power of 2."""
    out = {}
    for wkey, c in w_raw.items():
        for e, raw in _w_basis(L, mono, mu, wkey, max_exp).items():
            _add_into(out, e, {k: x * c for k, x in raw.items()})
    return _clean_state(out)


@lru_cache(maxsize=200000)
def _w_basis(L, mono, mu, wkey, max_exp):
    w_raw = {wkey: Q(1)}
    base_exp = -inner_product(L, mu, mu) / 2
    factors = [(j, n2 // 2 - 1) for n2, j in mono]
    out = {}
    for mask in itertools.product((False, True), repeat=len(factors)):
        state = {Q(0): w_raw}
        for (j, order), created in zip(factors, mask):
            if not created:
                state = _field_annihilation(L, state, j, order)
        if not state:
            continue
        state = _exp_plus(L, state, mu, True)
        pending = [f for f, created in zip(factors, mask) if created]
        reserve = sum(_creation_min(o) for _, o in pending)
        state = _exp_minus(L, state, mu, True, max_exp - base_exp - reserve)
        for j, order in pending:
            reserve -= _creation_min(order)
            state = _field_creation(L, state, j, order, max_exp - base_exp - reserve)
        for e, raw in state.items():
            _add_into(out, e + base_exp, raw)
    return _clean_state(out)


def _delta_step(L, state):
    """One application of ``Delta_z = sum c_mn a_j(m) a_j^*(n) z^(-m-n)``."""
    new = {}
    duals = dual_basis(L)
    for e, raw in state.items():
        top = _top_mode2(raw) // 2
        C = delta_coefficients(max(2 * top, 1))
        for j in range(L.rank):
            for n in range(top + 1):
                inner = clean(raw_mode(L, raw, duals[j], n))
                if not inner:
                    continue
                for m in range(top + 1):
                    if m + n == 0 or not C[m, n]:
                        continue
                    _add_into(new, e - m - n, clean(raw_mode(L, inner, unit(L, j), m, C[m, n])))
    return _clean_state(new)


def apply_delta(L: Lattice, v: FockVector, window=None) -> TruncatedSeries:
    """``exp(Delta_z) v`` for an untwisted vector; the series is finite with exponents ``<= 0``.

    If ``window = (lo, hi)`` is given, only exponents inside it are kept.
    """
    if v.twisted:
        raise InhomogeneousInput("exp(Delta_z) acts on untwisted vectors")
    total = {}
    for key, c in v.terms.items():
        for e, raw in _delta_basis(L, key).items():
            _add_into(total, e, {k: x * c for k, x in raw.items()})
    total = _clean_state(total)
    if window is not None:
        lo, hi = (Q(x) for x in window)
        total = {e: r for e, r in total.items() if lo <= e <= hi}
    return TruncatedSeries({e: FockVector(r) for e, r in total.items()}, Q(0) if window is None else Q(window[1]))


@lru_cache(maxsize=None)
def _delta_basis(L, key):
    total = {}
    term = {Q(0): {key: Q(1)}}
    k = 0
    while term:
        for e, raw in term.items():
            _add_into(total, e, raw)
        k += 1
        term = {e: {key: c / k for key, c in raw.items()} for e, raw in _delta_step(L, term).items()}
    return _clean_state(total)


def _single_base(v: FockVector):
    bases = v.bases()
    if len(bases) != 1:
        raise InhomogeneousInput(f"vector spans {len(bases)} lattice points; split it by M(1, mu) component first")
    return next(iter(bases))


def twisted_vertex_operator(L: Lattice, v: FockVector, w: FockVector, max_exp) -> TruncatedSeries:
    """``Y(v, z) w`` on M(1)(theta); the T_chi index of ``w`` is left untouched.

    ``v`` must lie in a single ``M(1, mu)``; the prefactor is ``2^(-<mu,mu>)``.
    """
    mu = _single_base(v)
    max_exp = Q(max_exp)
    out = {}
    for r, part in apply_delta(L, v).terms.items():
        for (mono, _), c in part.terms.items():
            for e, raw in _w_monomial(L, mono, mu, w.terms, max_exp - r).items():
                _add_into(out, e + r, {k: x * c for k, x in raw.items()})
    out = _clean_state(out)
    return TruncatedSeries({e: FockVector(r, True) for e, r in out.items()}, max_exp, -inner_product(L, mu, mu))


def apply_t_matrix(vec: FockVector, matrix) -> FockVector:
    """Act by a matrix on the T_chi index of every twisted state."""
    if isinstance(matrix, MonomialMatrix):
        out = {}
        for (mono, t), c in vec.terms.items():
            key = (mono, matrix.perm[t])
            out[key] = out.get(key, 0) + c * _i_power(matrix.phase[t])
        return FockVector(clean(out), True)
    dense = [[_real_or_gaussian(x) for x in row] for row in as_dense(matrix)]
    out = {}
    for (mono, t), c in vec.terms.items():
        for s in range(len(dense)):
            x = dense[s][t]
            if x:
                key = (mono, s)
                out[key] = out.get(key, 0) + c * x
    return FockVector(clean(out), True)


def _real_or_gaussian(x):
    """Keep real matrix entries as plain rationals; Gaussian arithmetic is slower."""
    return Q(x.re) if not x.im else x


def _i_power(k):
    k %= 4
    if k % 2 == 0:
        return Q(1 - k)
    return GaussianRational.i_power(k)


def _tensor(series: TruncatedSeries, matrix) -> TruncatedSeries:
    return TruncatedSeries({e: apply_t_matrix(v, matrix) for e, v in series.terms.items()}, series.max_exp, series.log2_prefactor)


def add_series(a: TruncatedSeries | None, b: TruncatedSeries) -> TruncatedSeries:
    if a is None:
        return b
    b = b.rescaled_to(a.log2_prefactor)
    terms = dict(a.terms)
    for e, v in b.terms.items():
        terms[e] = terms[e] + v if e in terms else v
    terms = {e: v for e, v in terms.items() if not v.is_zero()}
    max_exp = min(x for x in (a.max_exp, b.max_exp) if x is not None) if a.max_exp is not None or b.max_exp is not None else None
    return TruncatedSeries(terms, max_exp, a.log2_prefactor)


def full_twisted_operator(L: Lattice, u: FockVector, eta, w: FockVector, max_exp) -> TruncatedSeries:
    """``(Y(u, z) (x) eta) w`` for ``u`` in one ``M(1, lam + beta)``, homogeneous in weight."""
    _single_base(u)
    if len(vector_weights(L, u)) != 1:
        raise InhomogeneousInput("u must be homogeneous in conformal weight")
    return _tensor(twisted_vertex_operator(L, u, w, max_exp), eta)


def twisted_exponential_coeffs(L: Lattice, lam, window, states) -> dict:
    """Coefficients of ``Y(e^lam, z)`` as maps on ``states``: exponent -> list of images."""
    lam = tuple(Q(x) for x in lam)
    lo, hi = (Q(x) for x in window)
    lead = -inner_product(L, lam, lam) / 2
    if not lo <= lead <= hi:
        raise WindowTooSmall(f"leading exponent {lead} lies outside the window [{lo}, {hi}]")
    v = FockVector.lattice_vector(lam)
    cols = [twisted_vertex_operator(L, v, w, hi) for w in states]
    exps = sorted({e for s in cols for e in s.terms if e >= lo})
    return {
        "log2_prefactor": -inner_product(L, lam, lam),
        "coefficients": {e: [s.terms.get(e, FockVector({}, True)) for s in cols] for e in exps},
    }


@dataclass
class LatticeIntertwiner:
    """The intertwining operator ``V_{L+lam} x T_chi -> T_{chi^(lam)}``.

    On ``u`` in ``M(1, lam + beta)`` it acts as ``Y(u, z) (x) eta_{lam+beta}``;
    ``lam`` is used exactly as given (it fixes the signs of the eta maps).
    """

    lattice: Lattice
    chi_id: int
    lam: tuple

    def __post_init__(self):
        self.lam = tuple(Q(x) for x in self.lam)
        self.group = build_quotient_group(self.lattice)
        self.chi = self.group.characters[self.chi_id]
        self.target_chi = twist_character(self.chi, self.lam)
        self.source = build_sector_rep(self.group, self.chi)
        self.target = build_sector_rep(self.group, self.target_chi)
        self._f = solve_intertwiner(self.group, self.chi, self.lam)
        self._eta = {}

    @property
    def dim(self) -> int:
        return self.source.dim

    def eta(self, beta):
        beta = tuple(int(b) for b in beta)
        if beta not in self._eta:
            e_beta = self.target.of_lattice(beta).dense()
            sign = -1 if int(inner_product(self.lattice, beta, self.lam)) & 1 else 1
            self._eta[beta] = scale(sign, matmul(e_beta, self._f))
        return self._eta[beta]

    def beta_of(self, mu):
        beta = tuple(m - l for m, l in zip(mu, self.lam))
        if any(b.denominator != 1 for b in beta):
            raise InhomogeneousInput(f"e^{mu} is not in the coset of {self.lam}")
        return tuple(int(b) for b in beta)

    def apply(self, u: FockVector, w: FockVector, max_exp) -> TruncatedSeries:
        """``Y~(u, z) w`` for any ``u`` in ``V_{L+lam}``, split by lattice point."""
        by_base = {}
        for (mono, mu), c in u.terms.items():
            by_base.setdefault(mu, {})[mono, mu] = c
        total = None
        for mu in sorted(by_base):
            part = FockVector(by_base[mu])
            s = _tensor(twisted_vertex_operator(self.lattice, part, w, max_exp), self.eta(self.beta_of(mu)))
            total = add_series(total, s)
        if total is None:
            return TruncatedSeries({}, Q(max_exp), Q(0))
        return total


def module_operator(L: Lattice, chi_id: int, alpha, w: FockVector, max_exp) -> TruncatedSeries:
    """``Y(e^alpha, z) w`` for the twisted V_L-module ``M(1)(theta) (x) T_chi``."""
    return LatticeIntertwiner(L, chi_id, (0,) * L.rank).apply(FockVector.lattice_vector(alpha), w, max_exp)


def untwisted_lattice_operator(L: Lattice, alpha, u: FockVector, lam, max_exp) -> TruncatedSeries:
    """``Y(e^alpha, z) u`` on ``V_{L+lam}`` with ``e_alpha e^mu = eps(alpha, mu) e^(alpha+mu)``.

    ``eps(alpha, lam + beta) = eps(alpha, beta) (-1)^<alpha, lam>`` for the given
    coset representative ``lam``.
    """
    alpha = tuple(int(a) for a in alpha)
    lam = tuple(Q(x) for x in lam)
    afrac = tuple(Q(a) for a in alpha)
    max_exp = Q(max_exp)
    state = {}
    for (mono, mu), c in u.terms.items():
        beta = tuple(int(m - l) for m, l in zip(mu, lam))
        sign = extended_epsilon(L, alpha, lam, beta)
        new_mu = tuple(m + a for m, a in zip(mu, afrac))
        _add_into(state, inner_product(L, afrac, mu), {(mono, new_mu): c * sign})
    state = _exp_plus(L, _clean_state(state), afrac, False)
    state = _exp_minus(L, state, afrac, False, max_exp)
    return TruncatedSeries({e: FockVector(r) for e, r in state.items()}, max_exp, Q(0))


__all__ = [
    "LatticeIntertwiner",
    "add_series",
    "apply_delta",
    "apply_t_matrix",
    "full_twisted_operator",
    "module_operator",
    "twisted_exponential_coeffs",
    "twisted_vertex_operator",
    "untwisted_lattice_operator",
]

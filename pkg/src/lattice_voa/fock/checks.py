"""Coefficient-level verification of the twisted intertwining operators.

Every check compares two exactly computed truncated series coefficient by
coefficient inside an exponent window and reports each mismatch.
"""

from __future__ import annotations

import itertools
import math

from ..errors import WindowTooSmall
from ..lattice import Lattice, canonicalize_coset, discriminant_group, inner_product
from ..twisted import RelationReport
from ._numbers import Q
from .operators import LatticeIntertwiner, module_operator, twisted_vertex_operator, untwisted_lattice_operator
from .series import TruncatedSeries, binom
from .space import (
    FockVector,
    heisenberg_apply,
    state_weight,
    twisted_states,
    unit,
    untwisted_states,
    virasoro_L_minus1,
)

DEFAULT_TRUNC = 3
DEFAULT_WINDOW = (-4, 4)

CheckReport = RelationReport


def _zero():
    return FockVector({}, True)


def _rescale(series: TruncatedSeries, log2):
    return series.rescaled_to(log2) if series.terms else TruncatedSeries({}, series.max_exp, Q(log2))


def _compare(rep, lhs: TruncatedSeries, rhs: TruncatedSeries, lo, hi, **info):
    if lhs.terms and rhs.terms:
        rhs = _rescale(rhs, lhs.log2_prefactor)
    for e in sorted(set(lhs.restricted(lo, hi)) | set(rhs.restricted(lo, hi))):
        a = lhs.terms.get(e, _zero())
        b = rhs.terms.get(e, _zero())
        ok = (a - b).is_zero()
        rep.record(ok, **({} if ok else dict(exponent=str(e), lhs=repr(a), rhs=repr(b), **{k: _fmt(v) for k, v in info.items()})))


def top_mode(v: FockVector) -> int:
    """Largest annihilation mode that can act nontrivially on ``v``."""
    return max((n2 for mono, _ in v.terms for n2, _ in mono), default=0) // 2


def _fmt(v):
    return v if isinstance(v, int) else str(v) if not isinstance(v, FockVector) else repr(v)


def _window(window):
    lo, hi = (Q(x) for x in window)
    if lo > hi:
        raise WindowTooSmall(f"empty window [{lo}, {hi}]")
    return lo, hi


def check_L_minus1_derivative(L: Lattice, lam, chi_id: int = 0, trunc: int = DEFAULT_TRUNC, window=DEFAULT_WINDOW, twisted_weight=None) -> RelationReport:
    """``Y~(L(-1) u, z) = d/dz Y~(u, z)`` on all monomials ``u`` of weight ``<= trunc``."""
    lo, hi = _window(window)
    lam = canonicalize_coset(L, lam)
    op = LatticeIntertwiner(L, chi_id, lam)
    rep = RelationReport("L(-1)-derivative")
    ws = twisted_states(L, op.dim, trunc if twisted_weight is None else twisted_weight)
    for u in untwisted_states(L, lam, trunc):
        du = virasoro_L_minus1(L, u)
        for w in ws:
            rhs = op.apply(u, w, hi + 1).derivative()
            lhs = op.apply(du, w, hi) if du else TruncatedSeries({}, hi, rhs.log2_prefactor)
            _compare(rep, lhs, rhs, lo, hi, u=u, w=w)
    return rep


def check_heisenberg_covariance(L: Lattice, lam, chi_id: int = 0, trunc: int = DEFAULT_TRUNC, window=DEFAULT_WINDOW, modes=None, twisted_weight=None) -> RelationReport:
    """``[h(m), Y~(u, z)] = sum_j binom(m, j) z^(m-j) Y~(h(j) u, z)`` for half-odd ``m``."""
    lo, hi = _window(window)
    lam = canonicalize_coset(L, lam)
    op = LatticeIntertwiner(L, chi_id, lam)
    rep = RelationReport("Heisenberg covariance")
    modes = [Q(k, 2) for k in (-3, -1, 1, 3)] if modes is None else [Q(m) for m in modes]
    ws = twisted_states(L, op.dim, trunc if twisted_weight is None else twisted_weight)
    for u in untwisted_states(L, lam, trunc):
        for w in ws:
            base = op.apply(u, w, hi)
            for i, m in itertools.product(range(L.rank), modes):
                h = unit(L, i)
                first = {e: heisenberg_apply(L, h, m, v) for e, v in base.terms.items()}
                second = op.apply(u, heisenberg_apply(L, h, m, w), hi).rescaled_to(base.log2_prefactor) if base.terms else op.apply(u, heisenberg_apply(L, h, m, w), hi)
                lhs_terms = dict(first)
                for e, v in second.terms.items():
                    lhs_terms[e] = lhs_terms.get(e, _zero()) - v
                lhs = TruncatedSeries({e: v for e, v in lhs_terms.items() if not v.is_zero()}, hi, second.log2_prefactor)
                rhs_terms = {}
                for j in range(top_mode(u) + 1):
                    hu = heisenberg_apply(L, h, j, u)
                    if hu:
                        part = op.apply(hu, w, hi - m + j).rescaled_to(lhs.log2_prefactor)
                        c = binom(m, j)
                        for e, v in part.terms.items():
                            key = e + m - j
                            rhs_terms[key] = rhs_terms.get(key, _zero()) + v * c
                rhs = TruncatedSeries(rhs_terms, hi, lhs.log2_prefactor)
                _compare(rep, lhs, rhs, lo, hi, u=u, w=w, direction=i, mode=m)
    return rep


def check_grading(L: Lattice, lam, chi_id: int = 0, trunc: int = DEFAULT_TRUNC, window=DEFAULT_WINDOW) -> RelationReport:
    """The ``z^e`` coefficient of ``Y~(u, z) w`` has weight ``wt u + wt w + e``."""
    lo, hi = _window(window)
    lam = canonicalize_coset(L, lam)
    op = LatticeIntertwiner(L, chi_id, lam)
    rep = RelationReport("grading")
    for u in untwisted_states(L, lam, trunc):
        (ukey,) = u.terms
        wu = state_weight(L, ukey, False)
        for w in twisted_states(L, op.dim, trunc):
            (wkey,) = w.terms
            ww = state_weight(L, wkey, True)
            for e, v in op.apply(u, w, hi).terms.items():
                for key in v.terms:
                    ok = state_weight(L, key, True) == wu + ww + e
                    rep.record(ok, **({} if ok else dict(u=_fmt(u), w=_fmt(w), exponent=str(e))))
    return rep


def check_twisted_jacobi(L: Lattice, alpha, lam, chi_id: int = 0, window=DEFAULT_WINDOW, states=None, beta=None, collapse_theta: bool = False) -> RelationReport:
    """Twisted Jacobi identity for ``a = e^alpha`` and ``u = e^(lam+beta)``.

    Compares, for every ``z0^A z1^B z2^C`` in the window, the coefficients of

        z0^-1 d((z1-z2)/z0) Y(a, z1) Y~(u, z2) - z0^-1 d((z2-z1)/(-z0)) Y~(u, z2) Y(a, z1)
        = z2^-1 (1/2) sum_{p=0,1} d((-1)^p ((z1-z0)/z2)^(1/2)) Y~(Y(theta^p a, z0) u, z2)

    with ``theta(e^alpha) = e^-alpha``.  ``collapse_theta=True`` replaces
    ``theta(a)`` by ``a`` on the right, which turns the right side into the
    untwisted ``z2^-1 d((z1-z0)/z2) Y~(Y(a, z0) u, z2)``.
    """
    lo, hi = _window(window)
    alpha = tuple(int(a) for a in alpha)
    lam = tuple(Q(x) for x in lam)
    beta = tuple(0 for _ in alpha) if beta is None else tuple(int(b) for b in beta)
    op = LatticeIntertwiner(L, chi_id, lam)
    target_id = op.target_chi.id
    gam = tuple(l + b for l, b in zip(lam, beta))
    u = FockVector.lattice_vector(gam)
    a_log2 = -inner_product(L, alpha, alpha)
    log2 = a_log2 - inner_product(L, gam, gam)
    rep = RelationReport("twisted Jacobi" + (" (collapsed)" if collapse_theta else ""))
    states = [FockVector.twisted_ground(t) for t in range(op.dim)] if states is None else states

    A_range = [Q(x) for x in range(math.ceil(lo), math.floor(hi) + 1)]
    B_range = [Q(x, 2) for x in range(math.ceil(2 * lo), math.floor(2 * hi) + 1)]
    c_class = (-inner_product(L, gam, gam) / 2) % Q(1, 2)
    C_range = [c_class + Q(k, 2) for k in range(math.ceil(2 * (lo - c_class)), math.floor(2 * (hi - c_class)) + 1)]
    A_max, B_max, C_max = A_range[-1], B_range[-1], C_range[-1]

    for w in states:
        # Y(a, z1) Y~(u, z2) w on the target module
        inner = op.apply(u, w, C_max)
        c2min = min(inner.terms, default=C_max)
        b_bound = B_max + A_max + 1 + (C_max - c2min)
        F1 = {}
        for c, v in inner.terms.items():
            for b, x in module_operator(L, target_id, alpha, v, b_bound).terms.items():
                F1[b, c] = x
        F1_log2 = inner.log2_prefactor + a_log2
        # Y~(u, z2) Y(a, z1) w from the source module
        first = module_operator(L, chi_id, alpha, w, B_max)
        b1min = min(first.terms, default=B_max)
        c_bound = C_max + A_max + 1 + (B_max - b1min)
        F2 = {}
        F2_log2 = None
        for b, v in first.terms.items():
            s = op.apply(u, v, c_bound)
            F2_log2 = s.log2_prefactor + first.log2_prefactor
            for c, x in s.terms.items():
                F2[b, c] = x
        # Y~(Y(theta^p a, z0) u, z2) w
        X = []
        X_log2 = []
        for p in (0, 1):
            sgn = -1 if (p and not collapse_theta) else 1
            a_p = tuple(sgn * x for x in alpha)
            yu = untwisted_lattice_operator(L, a_p, u, lam, A_max)
            jmin = min(yu.terms, default=A_max)
            bound = C_max + 1 + B_max + (A_max - jmin)
            table, pref = {}, None
            for j, vec in yu.terms.items():
                s = op.apply(vec, w, bound)
                pref = s.log2_prefactor
                for c, x in s.terms.items():
                    table[j, c] = x
            X.append((table, jmin))
            X_log2.append(pref)

        def shift(log2_from):
            d = Q(log2_from) - log2
            if d.denominator != 1:
                raise ValueError("incommensurable powers of 2")
            return Q(2) ** int(d)

        f1 = shift(F1_log2) if F1 else 1
        f2 = shift(F2_log2) if F2 else 1
        xs = [shift(p) if p is not None else 1 for p in X_log2]

        for A, B, C in itertools.product(A_range, B_range, C_range):
            n = int(-A - 1)
            lhs = _zero()
            k = 0
            while C - k >= c2min:
                coef = binom(n, k) * (-1) ** k
                if coef:
                    v = F1.get((B - n + k, C - k))
                    if v is not None:
                        lhs = lhs + v * (coef * f1)
                k += 1
                if n >= 0 and k > n:
                    break
            k = 0
            sign2 = (-1) ** (n % 2)
            while B - k >= b1min:
                coef = binom(n, k) * (-1) ** k
                if coef:
                    v = F2.get((B - k, C - n + k))
                    if v is not None:
                        lhs = lhs - v * (coef * f2 * sign2)
                k += 1
                if n >= 0 and k > n:
                    break
            rhs = _zero()
            parity = -1 if (2 * B) % 2 else 1
            for p, ((table, jmin), scale_p) in enumerate(zip(X, xs)):
                weight = Q(1, 2) * (parity if p else 1)
                k = 0
                while A - k >= jmin:
                    v = table.get((A - k, C + 1 + B + k))
                    if v is not None:
                        rhs = rhs + v * (binom(B + k, k) * (-1) ** k * weight * scale_p)
                    k += 1
            ok = (lhs - rhs).is_zero()
            rep.record(ok, **({} if ok else dict(w=_fmt(w), z0=str(A), z1=str(B), z2=str(C), lhs=repr(lhs), rhs=repr(rhs))))
    return rep


def direct_expansion_h_minus1(L: Lattice, h, lam, w: FockVector, max_exp) -> TruncatedSeries:
    """``Y(h(-1) e^lam, z) w`` from the ground-state operator by explicit mode sums.

    Uses ``Y(h(-1)e^lam, z) = h^-(z) Y(e^lam, z) + Y(e^lam, z) h^+(z)
    - (1/2) <h, lam> z^-1 Y(e^lam, z)`` where ``h^-(z) = sum_{p>0} h(-p) z^(p-1)`` and
    ``h^+(z) = sum_{p>0} h(p) z^(-p-1)``; all modes act through heisenberg_apply.
    """
    h = tuple(Q(x) for x in h)
    lam = tuple(Q(x) for x in lam)
    max_exp = Q(max_exp)
    ground = FockVector.lattice_vector(lam)
    out = {}

    def add(e, v):
        if e <= max_exp and v:
            out[e] = out.get(e, _zero()) + v

    # h^-(z) Y(e^lam, z) w: Y needs exponents up to max_exp + 1/2
    base = twisted_vertex_operator(L, ground, w, max_exp + Q(1, 2))
    for e, v in base.terms.items():
        p = Q(1, 2)
        while e + p - 1 <= max_exp:
            add(e + p - 1, heisenberg_apply(L, h, -p, v))
            p += 1
    # Y(e^lam, z) h^+(z) w
    p = Q(1, 2)
    while True:
        hw = heisenberg_apply(L, h, p, w)
        if not hw.terms and 2 * p > 2 * max(sum(n2 for n2, _ in mono) for mono, _ in w.terms) + 2:
            break
        if hw.terms:
            s = twisted_vertex_operator(L, ground, hw, max_exp + p + 1)
            for e, v in s.terms.items():
                add(e - p - 1, v)
        p += 1
    corr = -inner_product(L, h, lam) / 2
    if corr:
        for e, v in twisted_vertex_operator(L, ground, w, max_exp + 1).terms.items():
            add(e - 1, v * corr)
    terms = {e: v for e, v in out.items() if not v.is_zero()}
    return TruncatedSeries(terms, max_exp, -inner_product(L, lam, lam))


def check_two_paths(L: Lattice, lam, trunc: int = 2, window=DEFAULT_WINDOW) -> RelationReport:
    """Normal-ordered composition against the explicit mode sums for ``h(-1) e^lam``."""
    lo, hi = _window(window)
    lam = tuple(Q(x) for x in lam)
    rep = RelationReport("two code paths")
    for i in range(L.rank):
        h = unit(L, i)
        u = FockVector.basis([(2, i)], lam, False)
        for w in twisted_states(L, 1, trunc):
            a = twisted_vertex_operator(L, u, w, hi)
            b = direct_expansion_h_minus1(L, h, lam, w, hi)
            _compare(rep, a, b, lo, hi, direction=i, w=w)
    return rep


def run_fock_suite(L: Lattice, trunc: int = DEFAULT_TRUNC, window=DEFAULT_WINDOW, lambdas=None) -> dict:
    """All operator-level checks for each coset representative in ``lambdas``."""
    D = discriminant_group(L)
    lambdas = D.reps if lambdas is None else [canonicalize_coset(L, x) for x in lambdas]
    out = {}
    for lam in lambdas:
        key = "(" + ",".join(str(x) for x in lam) + ")"
        reports = [
            check_L_minus1_derivative(L, lam, trunc=trunc, window=window),
            check_heisenberg_covariance(L, lam, trunc=trunc, window=window),
            check_grading(L, lam, trunc=trunc, window=window),
        ]
        for i in range(L.rank):
            reports.append(check_twisted_jacobi(L, unit_int(L, i), lam, window=window))
        out[key] = reports
    return out


def unit_int(L: Lattice, i: int):
    return tuple(int(j == i) for j in range(L.rank))

"""Exact series: the correction coefficients c_mn and truncated z-series."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ._numbers import Q


def binom(x, k: int) -> Q:
    """Generalized binomial coefficient ``x (x-1) ... (x-k+1) / k!`` for rational x."""
    x = Q(x)
    out = Q(1)
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


# bivariate polynomials truncated at total degree: dict (i, j) -> rational


def _poly_mul(p, q, deg):
    out = {}
    for (a, b), x in p.items():
        for (c, d), y in q.items():
            if a + b + c + d <= deg:
                out[a + c, b + d] = out.get((a + c, b + d), 0) + x * y
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class DeltaCoefficients:
    """Coefficients of ``-log(((1+x)^(1/2) + (1+y)^(1/2)) / 2) = sum c[m,n] x^m y^n``."""

    max_deg: int
    c: dict

    def __getitem__(self, mn) -> Q:
        m, n = mn
        if m + n > self.max_deg:
            raise KeyError(f"c[{m},{n}] lies beyond degree {self.max_deg}")
        return self.c.get((m, n), Q(0))

    def table(self):
        return [[self[m, n] for n in range(self.max_deg + 1 - m)] for m in range(self.max_deg + 1)]


@lru_cache(maxsize=None)
def delta_coefficients(max_deg: int) -> DeltaCoefficients:
    """Compose the binomial series of the square root with the log series.

    With ``s(x) = (1+x)^(1/2) - 1`` the argument of the log is ``1 + t`` where
    ``t = (s(x) + s(y)) / 2`` has no constant term, so ``-log(1+t)`` truncated at
    total degree ``max_deg`` needs only the powers ``t^1 .. t^max_deg``.
    """
    if max_deg < 0:
        raise ValueError("max_deg must be non-negative")
    t = {}
    for k in range(1, max_deg + 1):
        b = binom(Q(1, 2), k) / 2
        t[k, 0] = t.get((k, 0), 0) + b
        t[0, k] = t.get((0, k), 0) + b
    total = {}
    power = {(0, 0): Q(1)}
    for k in range(1, max_deg + 1):
        power = _poly_mul(power, t, max_deg)
        coef = Q((-1) ** k, k)  # -log(1+t) = sum (-1)^k t^k / k
        for key, v in power.items():
            total[key] = total.get(key, 0) + coef * v
    c = {(m, n): Q(total.get((m, n), 0)) for m in range(max_deg + 1) for n in range(max_deg + 1 - m)}
    return DeltaCoefficients(max_deg, c)


# -- truncated z-series -------------------------------------------------------


@dataclass
class TruncatedSeries:
    """``2^log2_prefactor * sum_e terms[e] z^e``, complete for every ``e <= max_exp``.

    Exponents are exact rationals (they range over a coset of (1/2)Z, or finer when
    ``<lam, lam>`` has a larger denominator).  Coefficients are either scalars or
    FockVectors; only nonzero coefficients are stored.  Lower truncation is
    automatic: every series produced here has finitely many terms below any
    bound.
    """

    terms: dict = field(default_factory=dict)
    max_exp: Q | None = None
    log2_prefactor: Q = Q(0)

    @property
    def window(self):
        lo = min(self.terms) if self.terms else None
        return lo, self.max_exp

    def coefficient(self, e):
        e = Q(e)
        if self.max_exp is not None and e > self.max_exp:
            raise KeyError(f"exponent {e} is beyond the truncation {self.max_exp}")
        return self.terms.get(e)

    def rescaled_to(self, log2_prefactor) -> "TruncatedSeries":
        """Same series written over ``2^log2_prefactor``; the shift must be integral."""
        shift = Q(self.log2_prefactor) - Q(log2_prefactor)
        if shift.denominator != 1:
            raise ValueError(f"prefactors 2^{self.log2_prefactor} and 2^{log2_prefactor} differ by an irrational factor")
        factor = Q(2) ** int(shift)
        return TruncatedSeries({e: v * factor for e, v in self.terms.items()}, self.max_exp, Q(log2_prefactor))

    def derivative(self) -> "TruncatedSeries":
        terms = {e - 1: v * e for e, v in self.terms.items() if e != 0}
        new_max = None if self.max_exp is None else self.max_exp - 1
        return TruncatedSeries(terms, new_max, self.log2_prefactor)

    def restricted(self, lo=None, hi=None) -> dict:
        return {e: v for e, v in self.terms.items() if (lo is None or e >= lo) and (hi is None or e <= hi)}

    def __repr__(self):
        head = ", ".join(f"z^{e}: {self.terms[e]!r}" for e in sorted(self.terms)[:4])
        more = " ..." if len(self.terms) > 4 else ""
        return f"TruncatedSeries(2^{self.log2_prefactor} * [{head}{more}], max_exp={self.max_exp})"

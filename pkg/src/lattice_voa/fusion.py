"""Irreducible module labels of V_L and their fusion products.

Untwisted modules are labelled by cosets of L in its dual, twisted ones by the
central characters of L^/K.  The three product rules are:

* ``V_{L+lam} x V_{L+mu} = V_{L+lam+mu}``
* ``V_{L+lam} x T_chi = T_{chi^(lam)}``
* ``T_chi1 x T_chi2 = sum of V_{L+lam}`` over the cosets singled out by a
  character condition; see :func:`fuse` for the two available conditions.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UnknownLabel
from .lattice import Lattice, discriminant_group
from .twisted import build_quotient_group, contragredient_character, twist_character

AS_STATED = "as-stated"
CONTRAGREDIENT = "contragredient"
TWISTED_RULES = (AS_STATED, CONTRAGREDIENT)


@dataclass(frozen=True, order=True)
class Untwisted:
    coset: tuple

    def __str__(self):
        return "V[L+(" + ",".join(str(x) for x in self.coset) + ")]"


@dataclass(frozen=True, order=True)
class Twisted:
    char_id: int

    def __str__(self):
        return f"T[chi{self.char_id}]"


SectorLabel = Untwisted | Twisted
FusionSum = Counter  # SectorLabel -> multiplicity


def enumerate_labels(L: Lattice) -> list:
    """All untwisted labels (in discriminant-group order), then all twisted ones."""
    D = discriminant_group(L)
    g = build_quotient_group(L)
    return [Untwisted(r) for r in D.reps] + [Twisted(ch.id) for ch in g.characters]


class FusionRing:
    """Fusion products among the labels of one lattice.

    ``twisted_rule`` selects the condition for ``T_chi1 x T_chi2``:

    * ``"as-stated"``: ``V_{L+lam}`` occurs iff ``chi2 = chi1^(lam)``;
    * ``"contragredient"``: ``V_{L+lam}`` occurs iff ``chi2' = chi1^(lam)``.

    The two agree whenever every character is self-contragredient.
    """

    def __init__(self, L: Lattice, twisted_rule: str = AS_STATED):
        if twisted_rule not in TWISTED_RULES:
            raise ValueError(f"twisted_rule must be one of {TWISTED_RULES}")
        self.lattice = L
        self.twisted_rule = twisted_rule
        self.disc = discriminant_group(L)
        self.group = build_quotient_group(L)
        self.labels = enumerate_labels(L)
        self._label_set = set(self.labels)

    def _check(self, x):
        if x not in self._label_set:
            raise UnknownLabel(f"{x!r} is not a module label of this lattice")

    def _char(self, x: Twisted):
        return self.group.characters[x.char_id]

    def fuse(self, a, b) -> Counter:
        self._check(a)
        self._check(b)
        if isinstance(a, Untwisted) and isinstance(b, Untwisted):
            return Counter({Untwisted(self.disc.add(a.coset, b.coset)): 1})
        if isinstance(a, Twisted) and isinstance(b, Untwisted):
            a, b = b, a
        if isinstance(a, Untwisted):
            return Counter({Twisted(twist_character(self._char(b), a.coset).id): 1})
        chi1, chi2 = self._char(a), self._char(b)
        target = contragredient_character(chi2) if self.twisted_rule == CONTRAGREDIENT else chi2
        out = Counter(Untwisted(lam) for lam in self.disc.reps if twist_character(chi1, lam).id == target.id)
        if not out:
            raise AssertionError(f"empty twisted product {a} x {b}")
        return out

    def contragredient(self, a):
        self._check(a)
        if isinstance(a, Untwisted):
            return Untwisted(self.disc.neg(a.coset))
        return Twisted(contragredient_character(self._char(a)).id)

    def table(self) -> "FusionTable":
        n = len(self.labels)
        index = {x: i for i, x in enumerate(self.labels)}
        entries = {}
        for i, j in itertools.product(range(n), repeat=2):
            entries[i, j] = Counter({index[x]: m for x, m in self.fuse(self.labels[i], self.labels[j]).items()})
        dual = tuple(index[self.contragredient(x)] for x in self.labels)
        return FusionTable(self.lattice, tuple(self.labels), entries, dual, self.twisted_rule)


def fuse(L: Lattice, a, b, twisted_rule: str = AS_STATED) -> Counter:
    return FusionRing(L, twisted_rule).fuse(a, b)


def contragredient(L: Lattice, a):
    return FusionRing(L).contragredient(a)


@dataclass
class FusionTable:
    lattice: Lattice
    labels: tuple
    entries: dict  # (i, j) -> Counter over label indices
    dual: tuple  # index of the contragredient label
    twisted_rule: str = AS_STATED

    def __len__(self):
        return len(self.labels)

    def multiplicity(self, c: int, a: int, b: int) -> int:
        return self.entries[a, b][c]

    def product(self, x: Counter, y: Counter) -> Counter:
        out = Counter()
        for i, m in x.items():
            for j, k in y.items():
                for c, r in self.entries[i, j].items():
                    out[c] += m * k * r
        return out

    def as_json(self):
        n = len(self.labels)
        return {
            "labels": [str(x) for x in self.labels],
            "table": [[sorted(self.entries[i, j].elements()) for j in range(n)] for i in range(n)],
        }

    def as_text(self):
        names = [str(x) for x in self.labels]
        n = len(names)
        cells = [[" + ".join(names[c] for c in sorted(self.entries[i, j].elements())) for j in range(n)] for i in range(n)]
        width = max(len(s) for row in cells for s in row)
        width = max(width, max(len(s) for s in names))
        lines = [" " * width + " | " + " | ".join(s.ljust(width) for s in names)]
        lines.append("-" * len(lines[0]))
        for name, row in zip(names, cells):
            lines.append(name.ljust(width) + " | " + " | ".join(s.ljust(width) for s in row))
        return "\n".join(lines)


def fusion_table(L: Lattice, twisted_rule: str = AS_STATED) -> FusionTable:
    return FusionRing(L, twisted_rule).table()


@dataclass
class RingReport:
    checks: dict = field(default_factory=dict)  # name -> number of instances checked
    failures: dict = field(default_factory=dict)  # name -> list of counterexamples
    order_two_cosets: list = field(default_factory=list)

    def record(self, name, ok, example):
        self.checks[name] = self.checks.get(name, 0) + 1
        self.failures.setdefault(name, [])
        if not ok:
            self.failures[name].append(example)

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def failed_checks(self):
        return [k for k, v in self.failures.items() if v]

    def as_dict(self, max_examples: int = 5):
        return {
            "passed": self.passed,
            "checks": {k: {"instances": self.checks[k], "failures": len(self.failures[k]), "examples": self.failures[k][:max_examples]} for k in self.checks},
            "order_two_cosets": self.order_two_cosets,
        }


def verify_ring_axioms(table: FusionTable) -> RingReport:
    """Exhaustively check the ring axioms and the fusion-rule symmetries.

    With ``N(c; a, b)`` the multiplicity of ``c`` in ``a x b`` this checks
    ``N(c; a, b) = N(c; b, a)`` and ``N(c; a, b) = N(b'; a, c')``, the identity
    ``V_L``, associativity over all triples, multiplicity one, separation of
    twisted and untwisted labels, and the coset structure of twisted products.
    Nonzero cosets with ``2 lam in L`` are listed under ``order_two_cosets``.
    """
    rep = RingReport()
    labels = table.labels
    n = len(labels)
    L = table.lattice
    D = discriminant_group(L)
    untw = [i for i, x in enumerate(labels) if isinstance(x, Untwisted)]
    tw = [i for i, x in enumerate(labels) if isinstance(x, Twisted)]
    unit = labels.index(Untwisted(D.reps[0]))
    names = [str(x) for x in labels]

    for i in range(n):
        rep.record("identity", table.entries[unit, i] == Counter({i: 1}) and table.entries[i, unit] == Counter({i: 1}), names[i])
    for a, b in itertools.product(range(n), repeat=2):
        e = table.entries[a, b]
        rep.record("commutativity", e == table.entries[b, a], [names[a], names[b]])
        rep.record("multiplicity_one", all(m == 1 for m in e.values()), [names[a], names[b]])
        twisted_count = (a in tw) + (b in tw)
        want = set(tw) if twisted_count == 1 else set(untw)
        rep.record("no_mixing", set(e) <= want, [names[a], names[b]])
        if a in tw and b in tw:
            rep.record("twisted_nonempty", bool(e), [names[a], names[b]])
        if a in untw and b in untw:
            expected = labels.index(Untwisted(D.add(labels[a].coset, labels[b].coset)))
            rep.record("untwisted_group_ring", e == Counter({expected: 1}), [names[a], names[b]])
        for c in range(n):
            lhs = table.multiplicity(c, a, b)
            rhs = table.multiplicity(table.dual[b], a, table.dual[c])
            rep.record("symmetry_contragredient", lhs == rhs, {"a": names[a], "b": names[b], "c": names[c], "N(c;a,b)": lhs, "N(b';a,c')": rhs})
    for a, b, c in itertools.product(range(n), repeat=3):
        left = table.product(table.entries[a, b], Counter({c: 1}))
        right = table.product(Counter({a: 1}), table.entries[b, c])
        rep.record("associativity", left == right, [names[a], names[b], names[c]])
    for i in range(n):
        rep.record("contragredient_involution", table.dual[table.dual[i]] == i, names[i])
    for a in tw:
        seen = Counter()
        for b in tw:
            seen.update(table.entries[a, b].keys())
        rep.record("twisted_partition", set(seen) == set(untw) and all(m == 1 for m in seen.values()), names[a])
    for r in D.reps[1:]:
        if D.canonicalize(tuple(2 * Fraction(x) for x in r)) == D.reps[0]:
            rep.order_two_cosets.append([str(x) for x in r])
    return rep


__all__ = [
    "AS_STATED",
    "CONTRAGREDIENT",
    "FusionRing",
    "FusionSum",
    "FusionTable",
    "RingReport",
    "SectorLabel",
    "Twisted",
    "Untwisted",
    "contragredient",
    "enumerate_labels",
    "fuse",
    "fusion_table",
    "verify_ring_axioms",
]

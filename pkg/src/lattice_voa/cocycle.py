"""The sign cocycle of the central extension of L by {±1}.

The section is fixed by ``eps(a_i, a_j) = (-1)^{G_ij}`` for ``i > j`` and ``+1``
for ``i <= j``, extended bimultiplicatively.  Values are returned as ``+1/-1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch
from .lattice import Lattice, inner_product


@dataclass(frozen=True)
class BilinearCocycle:
    lattice: Lattice
    exponent_matrix: tuple  # d x d over F2, strictly lower triangular

    @property
    def rank(self) -> int:
        return len(self.exponent_matrix)

    def exponent(self, a: Sequence[int], b: Sequence[int]) -> int:
        """``a^T B b mod 2`` with coordinates reduced mod 2 first."""
        d = self.rank
        if len(a) != d or len(b) != d:
            raise DimensionMismatch(f"cocycle of rank {d} evaluated on vectors of length {len(a)}, {len(b)}")
        a2 = [int(x) & 1 for x in a]
        b2 = [int(x) & 1 for x in b]
        B = self.exponent_matrix
        return sum(B[i][j] for i in range(d) if a2[i] for j in range(d) if b2[j]) & 1

    def __call__(self, a, b) -> int:
        return eval_epsilon(self, a, b)


def build_cocycle(L: Lattice) -> BilinearCocycle:
    G = L.gram
    d = L.rank
    B = tuple(tuple(G[i][j] & 1 if i > j else 0 for j in range(d)) for i in range(d))
    return BilinearCocycle(L, B)


def eval_epsilon(c: BilinearCocycle, a, b) -> int:
    return -1 if c.exponent(a, b) else 1


def commutator_sign(L: Lattice, a, b) -> int:
    """``c(a, b) = (-1)^<a, b>`` for lattice vectors."""
    return -1 if int(inner_product(L, a, b)) % 2 else 1


@dataclass
class CocycleReport:
    trials: int
    seed: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self):
        return {"trials": self.trials, "seed": self.seed, "passed": self.passed, "failures": self.failures}


def verify_cocycle_identities(c: BilinearCocycle, trials: int = 1000, seed: int = 0, box: int = 5) -> CocycleReport:
    """Check the cocycle identity, the commutator identity and normalization.

    Random integer triples are drawn from ``[-box, box]^d`` with a seeded RNG.
    """
    rng = random.Random(seed)
    L = c.lattice
    d = c.rank
    zero = (0,) * d
    failures = []
    for t in range(trials):
        a, b, g = ([rng.randint(-box, box) for _ in range(d)] for _ in range(3))
        ab = [x + y for x, y in zip(a, b)]
        bg = [x + y for x, y in zip(b, g)]
        if eval_epsilon(c, a, b) * eval_epsilon(c, ab, g) != eval_epsilon(c, b, g) * eval_epsilon(c, a, bg):
            failures.append({"trial": t, "identity": "cocycle", "a": a, "b": b, "c": g})
        # eps(b, a)^{-1} = eps(b, a) for signs
        if eval_epsilon(c, a, b) * eval_epsilon(c, b, a) != commutator_sign(L, a, b):
            failures.append({"trial": t, "identity": "commutator", "a": a, "b": b})
        if eval_epsilon(c, a, zero) != 1 or eval_epsilon(c, zero, a) != 1:
            failures.append({"trial": t, "identity": "normalization", "a": a})
    return CocycleReport(trials, seed, failures)

"""Exact twisted vertex operators on the rank one lattice [[2]].

Everything is a rational number (or a Gaussian rational once T_chi matrices
enter); no floating point is used anywhere.
"""

from fractions import Fraction

from lattice_voa import validate_lattice
from lattice_voa.fock import (
    FockVector,
    apply_delta,
    check_L_minus1_derivative,
    check_twisted_jacobi,
    delta_coefficients,
    twisted_vertex_operator,
)

# the correction coefficients: symmetric, rational, c[0,0] = 0
C = delta_coefficients(4)
for m, row in enumerate(C.table()):
    print(f"c[{m},*] =", "  ".join(str(x) for x in row))
print()

L = validate_lattice([[2]])
half = (Fraction(1, 2),)

# exp(Delta(z)) acting on a(-1) e^{alpha/2}: a z^-1 correction appears
u = FockVector.basis([(2, 0)], half, False)
print("exp(Delta) a(-1)e^(a/2) =", apply_delta(L, u))

# Y^tw(a(-1) e^{alpha/2}, z) on the twisted ground state, through z^1
ground = FockVector.twisted_ground()
series = twisted_vertex_operator(L, u, ground, 1)
print(f"prefactor 2^{series.log2_prefactor}")
for e in sorted(series.terms):
    print(f"  z^{e}:", series.terms[e])
print()

for lam in [(0,), half]:
    for rep in (
        check_L_minus1_derivative(L, lam, trunc=2, window=(-2, 2)),
        check_twisted_jacobi(L, (1,), lam, window=(-2, 2)),
    ):
        print(f"lam={lam[0]}: {rep.name}: {rep.checked} coefficient checks, {len(rep.failures)} failures")

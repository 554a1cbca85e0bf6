"""Walk through the module labels of a few small lattice VOAs.

Run with ``python demos/sectors.py``.
"""

from lattice_voa import build_quotient_group, build_sector_rep, discriminant_group, enumerate_labels, validate_lattice

LATTICES = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "diag(2,4)": [[2, 0], [0, 4]],
}

for name, gram in LATTICES.items():
    L = validate_lattice(gram)
    D = discriminant_group(L)
    print(f"== {name}: rank {L.rank}, det {L.det}")
    # L*/L indexes the untwisted modules V_{L+lam}
    print("   L*/L invariant factors:", list(D.invariant_factors))
    print("   coset reps:", [tuple(str(x) for x in r) for r in D.reps])

    # the twisted modules come from central characters of the extraspecial quotient
    g = build_quotient_group(L)
    print(f"   quotient group has order {g.order}, center order {g.center.center_order}")
    for chi in g.characters:
        rep = build_sector_rep(g, chi)
        print(f"   chi{chi.id}: dim T_chi = {rep.dim}")

    labels = enumerate_labels(L)
    print("   labels:", ", ".join(map(str, labels)))
    print()

# the sum of squares of the T_chi dimensions recovers |L/2L|
L = validate_lattice(LATTICES["D4"])
g = build_quotient_group(L)
dims = [build_sector_rep(g, chi).dim for chi in g.characters]
print("D4: sum dim^2 =", sum(d * d for d in dims), "= 2^rank =", 2**L.rank)

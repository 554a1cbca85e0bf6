"""Fusion tables and the ring axioms, under both twisted x twisted rules.

The default rule pairs T_chi1 with T_chi2 when chi2 equals the twist of chi1
by lam.  The "contragredient" rule twists the dual character instead.  For
lattices whose center has characters that are not self-dual the two differ,
and only the second gives a commutative ring with duality.
"""

from lattice_voa import AS_STATED, CONTRAGREDIENT, fusion_table, validate_lattice, verify_ring_axioms

A1 = validate_lattice([[2]])
print(fusion_table(A1).as_text())
print()

for gram in ([[2]], [[2, -1], [-1, 2]], [[2, 0], [0, 4]], [[4]]):
    L = validate_lattice(gram)
    for rule in (AS_STATED, CONTRAGREDIENT):
        report = verify_ring_axioms(fusion_table(L, rule))
        failed = report.failed_checks()
        status = "all axioms hold" if report.passed else "fails " + ", ".join(failed)
        print(f"{str(gram):22} {rule:15} {status}")

# one concrete failing instance on A1 under the default rule
report = verify_ring_axioms(fusion_table(A1, AS_STATED))
if not report.passed:
    name = report.failed_checks()[0]
    print("\nexample failure of", name + ":", report.failures[name][0])

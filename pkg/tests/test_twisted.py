import itertools
from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given

from lattice_voa import (
    build_quotient_group,
    build_sector_rep,
    contragredient_character,
    discriminant_group,
    enumerate_central_characters,
    eta_map,
    inner_product,
    solve_intertwiner,
    twist_character,
    validate_lattice,
)
from lattice_voa.errors import NotInDualLattice, RankTooLarge
from lattice_voa.exact import GaussianRational, MonomialMatrix, dense_identity
from lattice_voa.twisted import (
    QuotientGroupElement,
    check_commutator_relation,
    check_eta_relations,
    check_intertwiner_commutation,
    sigma_sign,
    twisted_summary,
)

from conftest import A1, A2, D4, DIAG_2_4, E8, FOUR, SMALL
from strategies import lattices


def sym(m):
    rows = m.dense() if isinstance(m, MonomialMatrix) else m
    return sympy.Matrix([[sympy.Rational(x.re) + sympy.I * sympy.Rational(x.im) for x in r] for r in rows])


def brute_center(g):
    els = list(g.elements())
    return [x for x in els if all(g.mul(x, y) == g.mul(y, x) for y in els)]


# -- group --------------------------------------------------------------------


@pytest.mark.parametrize("gram, order, abelian", [(A1, 4, True), (A2, 8, False), (E8, 512, False)])
def test_group_examples(gram, order, abelian):
    g = build_quotient_group(validate_lattice(gram))
    assert g.order == order == len(list(g.elements()))
    gens = [g.kappa, *g.generators]
    assert abelian == all(g.mul(x, y) == g.mul(y, x) for x in gens for y in gens)


@pytest.mark.parametrize("name", list(SMALL))
def test_group_axioms_exhaustive(name):
    g = build_quotient_group(validate_lattice(SMALL[name]))
    els = list(g.elements())
    e = g.identity
    for x in els:
        assert g.mul(x, e) == g.mul(e, x) == x
        assert g.mul(x, g.inv(x)) == e
    for x, y, z in itertools.product(els, repeat=3):
        assert g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))


@given(lattices(max_rank=3))
def test_commutator_is_kappa_to_the_pairing(L):
    g = build_quotient_group(L)
    for x, y in itertools.product(g.elements(), repeat=2):
        expect = g.kappa if int(inner_product(L, x.vec, y.vec)) % 2 else g.identity
        assert g.commutator(x, y) == expect


@given(lattices(max_rank=3))
def test_center_matches_brute_force(L):
    g = build_quotient_group(L)
    center = brute_center(g)
    assert len(center) == g.center.center_order
    assert {x for x in g.elements() if g.is_central(x)} == set(center)


def test_e8_center_is_kappa_only(e8):
    g = build_quotient_group(e8)
    assert g.center.center_order == 2 and g.center.radical_basis == ()


def test_rank_cap():
    L = validate_lattice([[2]], max_rank=0)
    with pytest.raises(RankTooLarge):
        build_quotient_group(L)


# -- characters -----------------------------------------------------------------


@pytest.mark.parametrize("gram, count", [(A1, 2), (E8, 1), (A2, 1), (DIAG_2_4, 4), (FOUR, 2), (D4, 4)])
def test_character_counts(gram, count):
    assert len(enumerate_central_characters(build_quotient_group(validate_lattice(gram)))) == count


@given(lattices(max_rank=3))
def test_character_invariants(L):
    g = build_quotient_group(L)
    center = brute_center(g)
    chars = enumerate_central_characters(g)
    assert len(chars) == g.center.center_order // 2
    assert len({c.exponents for c in chars}) == len(chars)
    for chi in chars:
        assert chi.exponent_of(g.kappa) == 2
        for x in center:
            v = chi(x)
            assert v * v * v * v == GaussianRational(1)
            assert chi(g.mul(x, x)) == v * v
            for y in center:
                assert chi(g.mul(x, y)) == v * chi(y)


def test_character_ids_are_stable(a1):
    g = build_quotient_group(a1)
    assert [c.exponents for c in g.characters] == [(0,), (2,)]


# -- T_chi -------------------------------------------------------------------------


@pytest.mark.parametrize("gram, dim", [(A1, 1), (E8, 16), (A2, 2), (DIAG_2_4, 1), (D4, 2)])
def test_sector_dims(gram, dim):
    g = build_quotient_group(validate_lattice(gram))
    for chi in g.characters:
        assert build_sector_rep(g, chi).dim == dim
    assert len(g.characters) * dim**2 == 2 ** g.rank


@given(lattices(max_rank=3))
def test_sum_of_squares(L):
    s = twisted_summary(L)
    assert s["num_characters"] * s["dim_T_chi"] ** 2 == 2**L.rank


def test_e8_rep_relations(e8):
    g = build_quotient_group(e8)
    rep = build_sector_rep(g, g.characters[0])
    assert rep.check_invariants() == []
    a, b = g.generators[2], g.generators[3]  # <a3, a4> = -1: anticommute
    assert rep.matrix(a) @ rep.matrix(b) == (rep.matrix(b) @ rep.matrix(a)).scaled(2)


def _sympy_commutant_dim(mats):
    n = mats[0].shape[0]
    xs = sympy.symbols(f"x0:{n * n}")
    X = sympy.Matrix(n, n, xs)
    eqs = []
    for M in mats:
        eqs.extend(X * M - M * X)
    A, _ = sympy.linear_eq_to_matrix(eqs, xs)
    return n * n - A.rank()


@pytest.mark.parametrize("name", ["A2", "D4", "diag24"])
def test_irreducible_by_linear_algebra(name):
    g = build_quotient_group(validate_lattice(SMALL[name]))
    for chi in g.characters:
        rep = build_sector_rep(g, chi)
        mats = [sym(rep.matrix(x)) for x in [g.kappa, *g.generators]]
        assert _sympy_commutant_dim(mats) == 1
        assert mats[0] == -sympy.eye(rep.dim)


@given(lattices(max_rank=3))
def test_representation_is_a_homomorphism(L):
    g = build_quotient_group(L)
    for chi in g.characters:
        rep = build_sector_rep(g, chi)
        for x, y in itertools.product(g.elements(), repeat=2):
            assert rep.matrix(x) @ rep.matrix(y) == rep.matrix(g.mul(x, y))


# -- twist and contragredient ----------------------------------------------------


def test_twist_examples(a1):
    g = build_quotient_group(a1)
    c0, c1 = g.characters
    assert twist_character(c0, (0,)) == c0
    assert twist_character(c0, (F(1, 2),)) == c1
    assert twist_character(c1, (F(1, 2),)) == c0
    assert twist_character(c0, (F(3, 2),)).exponent_of(g.kappa) == 2
    with pytest.raises(NotInDualLattice):
        twist_character(c0, (F(1, 3),))


@given(lattices(max_rank=3))
def test_twist_is_an_action(L):
    g = build_quotient_group(L)
    reps = discriminant_group(L).reps[:8]
    for chi in g.characters:
        for lam in reps:
            shifted = tuple(x + 1 for x in lam)
            assert twist_character(chi, shifted) == twist_character(chi, lam)
            for mu in reps:
                both = tuple(a + b for a, b in zip(lam, mu))
                assert twist_character(twist_character(chi, lam), mu) == twist_character(chi, both)


@given(lattices(max_rank=3))
def test_twist_orbits_partition(L):
    g = build_quotient_group(L)
    reps = discriminant_group(L).reps
    for chi in g.characters:
        stab = [lam for lam in reps if twist_character(chi, lam) == chi]
        assert len(reps) % len(stab) == 0
        orbit = {twist_character(chi, lam).id for lam in reps}
        assert len(orbit) * len(stab) == len(reps)


def test_contragredient_examples(a1):
    g = build_quotient_group(a1)
    c0, c1 = g.characters
    assert contragredient_character(c0) == c1
    assert contragredient_character(contragredient_character(c0)) == c0
    assert contragredient_character(c0).exponent_of(g.kappa) == 2


@given(lattices(max_rank=4))
def test_contragredient_involution(L):
    g = build_quotient_group(L)
    for chi in g.characters:
        assert contragredient_character(contragredient_character(chi)) == chi


# -- intertwiners and eta maps ----------------------------------------------------


def test_intertwiner_examples(a1, e8):
    g = build_quotient_group(a1)
    one = GaussianRational(1)
    assert solve_intertwiner(g, g.characters[0], (F(1, 2),)) == ((one,),)
    assert solve_intertwiner(g, g.characters[0], (0,)) == dense_identity(1)
    g8 = build_quotient_group(e8)
    assert solve_intertwiner(g8, g8.characters[0], (0,) * 8) == dense_identity(16)


@pytest.mark.parametrize("name", ["A2", "D4", "diag24", "four"])
def test_intertwiner_property_dense(name):
    L = validate_lattice(SMALL[name])
    g = build_quotient_group(L)
    for chi in g.characters:
        for lam in discriminant_group(L).reps:
            f = sym(solve_intertwiner(g, chi, lam))
            src = build_sector_rep(g, chi)
            tgt = build_sector_rep(g, twist_character(chi, lam))
            for x in g.elements():
                sign = (-1) ** (sigma_sign(L, lam, x) // 2)
                assert f * sym(src.matrix(x)) * sign == sym(tgt.matrix(x)) * f
            assert f.det() != 0


def test_eta_at_zero_is_f(a2):
    g = build_quotient_group(a2)
    chi = g.characters[0]
    lam = discriminant_group(a2).reps[1]
    assert eta_map(g, chi, lam, (0, 0)) == solve_intertwiner(g, chi, lam)


@pytest.mark.parametrize("name", list(SMALL))
def test_matrix_relations(name):
    L = validate_lattice(SMALL[name])
    for rep in (check_commutator_relation(L), check_intertwiner_commutation(L), check_eta_relations(L)):
        assert rep.passed, rep.failures[:3]
        assert rep.checked > 0


def test_element_repr():
    assert repr(QuotientGroupElement(1, (0, 1))) == "(1, 01)"

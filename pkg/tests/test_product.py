"""Clifford products, contractions, the Clifford map, and reversion."""

import random
from itertools import combinations

import pytest

from grassclif import (
    Algorithm,
    BilinearForm,
    Blade,
    Multivector,
    cbasis,
    clifford_map,
    cmul,
    cmul_chevalley,
    cmul_n,
    cmul_rota_stein,
    cup,
    form_eval,
    left_contract,
    random_blade,
    random_polynomial,
    reversion,
    right_contract,
    split,
    wedge,
)

from support import blade, bmv, fe, mv, perm_det, random_rational_form, random_vector


B3 = BilinearForm.named("B", 3)
B4 = BilinearForm.named("B", 4)


# -- left contraction -------------------------------------------------------

def test_lc_vectors_give_form_value():
    assert left_contract(bmv(3, 1), bmv(3, 2), B3) == Multivector.unit(3, fe("B", 1, 2))


def test_lc_unit_contraction():
    rng = random.Random(1)
    for _ in range(10):
        u = random_polynomial(rng, 3, 3)
        assert left_contract(Multivector.unit(3), u, B3) == u


def test_lc_vector_into_bivector():
    # axiom (ii) expanded by hand on e1 _| (e2 ^ e3)
    expected = bmv(3, 3).scale(fe("B", 1, 2)) - bmv(3, 2).scale(fe("B", 1, 3))
    assert left_contract(bmv(3, 1), bmv(3, 2, 3), B3) == expected


def test_lc_grade_arithmetic():
    rng = random.Random(2)
    for _ in range(30):
        a = random_blade(rng, 4)
        b = random_blade(rng, 4)
        out = left_contract(a.as_multivector(), b.as_multivector(), B4)
        want = b.grade - a.grade
        assert all(t.grade == want for t, _ in out.terms())


def test_lc_axioms_on_random_instances():
    rng = random.Random(3)
    for _ in range(25):
        dim = rng.choice([3, 4])
        B = random_rational_form(rng, dim)
        x = random_vector(rng, dim)
        y = random_vector(rng, dim)
        u = random_polynomial(rng, dim, 3)
        v = random_polynomial(rng, dim, 3)
        w = random_polynomial(rng, dim, 3)
        # (i) on vectors
        assert left_contract(x, y, B) == Multivector.unit(dim, form_eval(B, x, y))
        # (ii) twisted Leibniz rule
        lhs = left_contract(x, wedge(u, v), B)
        rhs = wedge(left_contract(x, u, B), v) + wedge(u.gradeinv(), left_contract(x, v, B))
        assert lhs == rhs
        # (iii) wedge on the left becomes nested contraction
        assert left_contract(wedge(u, v), w, B) == left_contract(u, left_contract(v, w, B), B)


# -- right contraction ------------------------------------------------------

def test_rc_vectors():
    assert right_contract(bmv(3, 2), bmv(3, 1), B3) == Multivector.unit(3, fe("B", 2, 1))


def test_rc_unit():
    rng = random.Random(4)
    for _ in range(10):
        u = random_polynomial(rng, 3, 3)
        assert right_contract(u, Multivector.unit(3), B3) == u


def test_rc_bivector_by_vector():
    expected = bmv(3, 1).scale(fe("B", 2, 2)) - bmv(3, 2).scale(fe("B", 1, 2))
    assert right_contract(bmv(3, 1, 2), bmv(3, 2), B3) == expected


def test_rc_matches_split_recursion_correction():
    # the recursive product peels its last generator x off a = front ^ x:
    #   a &c b = front &c (x _| b + x ^ b) - (front |_ x) &c b
    # so the right contraction must reproduce the correction term exactly
    rng = random.Random(5)
    for _ in range(40):
        dim = 4
        a = random_blade(rng, dim)
        if a.grade < 2:
            continue
        b = random_blade(rng, dim)
        idx = a.indices
        front = blade(dim, *idx[:-1]).as_multivector()
        x = bmv(dim, idx[-1])
        lhs = cmul_chevalley(a, b, B4)
        rhs = cmul(front, clifford_map(x, b.as_multivector(), B4), B4) \
            - cmul(right_contract(front, x, B4), b.as_multivector(), B4)
        assert lhs == rhs


def test_rc_is_reversion_conjugated_lc_for_symmetric_forms():
    g = BilinearForm.symmetric_named("g", 3)
    for a in cbasis(3):
        for b in cbasis(3):
            lhs = right_contract(a.as_multivector(), b.as_multivector(), g)
            rhs = reversion(
                left_contract(
                    reversion(b.as_multivector(), g),
                    reversion(a.as_multivector(), g),
                    g,
                ),
                g,
            )
            assert lhs == rhs


# -- the Clifford map -------------------------------------------------------

def test_clifford_map_examples():
    got = clifford_map(bmv(3, 1), bmv(3, 2), B3)
    assert got == bmv(3, 1, 2) + Multivector.unit(3, fe("B", 1, 2))
    assert clifford_map(bmv(3, 1), Multivector.unit(3), B3) == bmv(3, 1)
    with pytest.raises(ValueError):
        clifford_map(bmv(3, 1, 2), bmv(3, 1), B3)


def test_clifford_map_operator_identities():
    rng = random.Random(6)
    for _ in range(25):
        dim = rng.choice([3, 4, 5])
        B = random_rational_form(rng, dim)
        x = random_vector(rng, dim)
        y = random_vector(rng, dim)
        u = random_polynomial(rng, dim, 3)
        # composition law
        lhs = clifford_map(x, clifford_map(y, u, B), B)
        rhs = left_contract(wedge(x, y), u, B) + wedge(wedge(x, y), u) \
            + u.scale(form_eval(B, x, y))
        assert lhs == rhs
        # linearity in the vector slot
        both = x.scale(2) + y.scale(-3)
        assert clifford_map(both, u, B) == clifford_map(x, u, B).scale(2) \
            + clifford_map(y, u, B).scale(-3)


# -- recursive blade product ------------------------------------------------

def test_cmul_bivector_pair_expansion():
    got = cmul_chevalley(blade(4, 1, 2), blade(4, 3, 4), B4)
    expected = (
        Multivector.unit(4, fe("B", 2, 3) * fe("B", 1, 4) - fe("B", 2, 4) * fe("B", 1, 3))
        + bmv(4, 1, 4).scale(fe("B", 2, 3))
        - bmv(4, 1, 3).scale(fe("B", 2, 4))
        - bmv(4, 2, 4).scale(fe("B", 1, 3))
        + bmv(4, 2, 3).scale(fe("B", 1, 4))
        + bmv(4, 1, 2, 3, 4)
    )
    assert got == expected


def test_cmul_unit_cases():
    b = blade(4, 2, 3)
    assert cmul_chevalley(Blade.unit(4), b, B4) == b.as_multivector()
    assert cmul_chevalley(b, Blade.unit(4), B4) == b.as_multivector()


def test_cmul_vector_into_trivector():
    got = cmul_chevalley(blade(4, 1), blade(4, 2, 3, 4), B4)
    expected = (
        bmv(4, 1, 2, 3, 4)
        + bmv(4, 3, 4).scale(fe("B", 1, 2))
        - bmv(4, 2, 4).scale(fe("B", 1, 3))
        + bmv(4, 2, 3).scale(fe("B", 1, 4))
    )
    assert got == expected


# -- cup --------------------------------------------------------------------

def test_cup_base_cases():
    assert cup((), (), B4) == 1
    assert cup((1,), (3,), B4) == fe("B", 1, 3)
    assert cup((1,), (1, 2), B4) == 0


def test_cup_two_by_two():
    got = cup((1, 2), (3, 4), B4)
    assert got == fe("B", 1, 3) * fe("B", 2, 4) - fe("B", 1, 4) * fe("B", 2, 3)


def test_cup_equals_permutation_determinant():
    B5 = BilinearForm.named("B", 5)
    indices = range(1, 6)
    for k in range(5):
        for xs in combinations(indices, k):
            for ys in combinations(indices, k):
                assert cup(xs, ys, B5) == perm_det(B5, xs, ys)


def test_cup_index_validation():
    with pytest.raises(ValueError):
        cup((1, 5), (2, 3), B4)


# -- split-sum product and algorithm equivalence ----------------------------

def test_split_sum_unit_and_vector_cases():
    assert cmul_rota_stein(Blade.unit(3), blade(3, 1, 3), B3) == bmv(3, 1, 3)
    got = cmul_rota_stein(blade(3, 1), blade(3, 2), B3)
    assert got == bmv(3, 1, 2) + Multivector.unit(3, fe("B", 1, 2))


def test_algorithms_agree_exhaustively_symbolic():
    for dim in range(1, 5):
        B = BilinearForm.named("B", dim)
        for a in cbasis(dim):
            for b in cbasis(dim):
                assert cmul_chevalley(a, b, B) == cmul_rota_stein(a, b, B), (a, b)


def test_algorithms_agree_high_dims_random_rational():
    rng = random.Random(99)
    for dim in range(6, 10):
        B = random_rational_form(rng, dim)
        for _ in range(200):
            a, b = random_blade(rng, dim), random_blade(rng, dim)
            assert cmul_chevalley(a, b, B) == cmul_rota_stein(a, b, B), (dim, a, b)


# -- the bilinear wrapper ----------------------------------------------------

def test_anticommutator_gives_symmetric_part():
    g = BilinearForm.symmetric_named("g", 2)
    e1, e2 = bmv(2, 1), bmv(2, 2)
    assert cmul(e1, e2, g) + cmul(e2, e1, g) == Multivector.unit(2, 2 * fe("g", 1, 2))
    B = BilinearForm.named("B", 4)
    for i in range(1, 5):
        for j in range(1, 5):
            acc = cmul(bmv(4, i), bmv(4, j), B) + cmul(bmv(4, j), bmv(4, i), B)
            assert acc == Multivector.unit(4, fe("B", i, j) + fe("B", j, i))


def test_symbolic_mult_table_dim2():
    from grassclif import Scalar

    a = Scalar.sym("a")
    B = BilinearForm.explicit([[1, a], [a, 1]])
    basis = [b.as_multivector() for b in cbasis(2)]
    table = [[cmul(x, y, B) for y in basis] for x in basis]
    Id, e1, e2, e12 = basis
    assert table[1][1] == Id
    assert table[1][2] == e12 + Id.scale(a)
    assert table[2][1] == -e12 + Id.scale(a)
    assert table[1][3] == e2 - e1.scale(a)
    assert table[2][3] == e2.scale(a) - e1
    assert table[3][1] == e1.scale(a) - e2
    assert table[3][2] == e1 - e2.scale(a)
    assert table[3][3] == Id.scale(a * a - 1)


def test_mult_table_with_antisymmetric_part():
    from grassclif import Scalar

    g11, g12, g22, F12 = (Scalar.sym(s) for s in ("g11", "g12", "g22", "F12"))
    B = BilinearForm.explicit([[g11, g12 + F12], [g12 - F12, g22]])
    e1, e2, e12 = bmv(2, 1), bmv(2, 2), bmv(2, 1, 2)
    Id = Multivector.unit(2)
    assert cmul(e12, e12, B) == Id.scale(g12 * g12 - F12 * F12 - g22 * g11) - e12.scale(2 * F12)
    assert cmul(e1, e12, B) == e2.scale(g11) - e1.scale(g12 + F12)
    assert cmul(e1, e2, B) + cmul(e2, e1, B) == Id.scale(2 * g12)


def test_associativity_symbolic_polynomials():
    rng = random.Random(17)
    for dim in (3, 4):
        B = BilinearForm.named("B", dim)
        for _ in range(4):
            u = random_polynomial(rng, dim, 2)
            v = random_polynomial(rng, dim, 2)
            z = random_polynomial(rng, dim, 2)
            assert cmul(cmul(u, v, B), z, B) == cmul(u, cmul(v, z, B), B)


def test_unit_is_neutral_for_both_algorithms():
    rng = random.Random(23)
    for algo in Algorithm:
        for _ in range(10):
            u = random_polynomial(rng, 4, 3)
            assert cmul(Multivector.unit(4), u, B4, algo) == u
            assert cmul(u, Multivector.unit(4), B4, algo) == u


def test_zero_form_collapses_to_wedge():
    for dim in (1, 2, 3):
        Z = BilinearForm.zero(dim)
        for a in cbasis(dim):
            for b in cbasis(dim):
                assert cmul(a.as_multivector(), b.as_multivector(), Z) == \
                    wedge(a.as_multivector(), b.as_multivector())


def test_degenerate_direction_squares_to_zero():
    S = BilinearForm.from_signature(0, 3, 1)
    e4 = bmv(4, 4)
    assert cmul(e4, e4, S).is_zero()
    e1 = bmv(4, 1)
    assert cmul(e1, e1, S) == -Multivector.unit(4)


def test_cmul_n():
    got = cmul_n([bmv(3, 1), bmv(3, 2), bmv(3, 3)], B3)
    expected = (
        bmv(3, 1, 2, 3)
        + bmv(3, 1).scale(fe("B", 2, 3))
        - bmv(3, 2).scale(fe("B", 1, 3))
        + bmv(3, 3).scale(fe("B", 1, 2))
    )
    assert got == expected
    u = mv(3, ((1, 2), 2))
    assert cmul_n([u], B3) == u
    E = BilinearForm.from_signature(1, 0)
    e1 = bmv(1, 1)
    assert cmul_n([e1, e1, e1], E) == e1


def test_cmul_dimension_mismatch():
    with pytest.raises(ValueError):
        cmul(bmv(2, 1), bmv(3, 1), B3)
    with pytest.raises(ValueError):
        cmul(bmv(2, 1), bmv(2, 2), B3)


# -- reversion ---------------------------------------------------------------

def _split_form(dim):
    return BilinearForm.symmetric_named("g", dim) + BilinearForm.antisymmetric_named("F", dim)


def test_reversion_bivector_with_antisymmetric_part():
    B = _split_form(3)
    got = reversion(bmv(3, 1, 2), B)
    assert got == -bmv(3, 1, 2) - Multivector.unit(3, 2 * fe("F", 1, 2))


def test_reversion_bivector_symmetric_form():
    g = BilinearForm.symmetric_named("g", 3)
    assert reversion(bmv(3, 1, 2), g) == -bmv(3, 1, 2)


def test_reversion_of_basis_against_split_form():
    B = _split_form(3)
    got = [reversion(b.as_multivector(), B) for b in cbasis(3)]
    Id = Multivector.unit(3)
    F = lambda i, j: fe("F", i, j)
    expected = [
        Id, bmv(3, 1), bmv(3, 2), bmv(3, 3),
        -bmv(3, 1, 2) - Id.scale(2 * F(1, 2)),
        -bmv(3, 1, 3) - Id.scale(2 * F(1, 3)),
        -bmv(3, 2, 3) - Id.scale(2 * F(2, 3)),
        -bmv(3, 1).scale(2 * F(2, 3)) + bmv(3, 2).scale(2 * F(1, 3))
        - bmv(3, 3).scale(2 * F(1, 2)) - bmv(3, 1, 2, 3),
    ]
    assert got == expected


def test_reversion_is_antiautomorphism():
    rng = random.Random(31)
    B = _split_form(3)
    for _ in range(8):
        u = random_polynomial(rng, 3, 3)
        v = random_polynomial(rng, 3, 3)
        lhs = reversion(cmul(u, v, B), B)
        rhs = cmul(reversion(v, B), reversion(u, B), B)
        assert lhs == rhs


def test_reversion_classical_signs_for_symmetric_forms():
    rng = random.Random(37)
    for _ in range(5):
        dim = rng.choice([3, 4])
        g = BilinearForm.symmetric_named("g", dim)
        for b in cbasis(dim):
            k = b.grade
            sign = -1 if (k * (k - 1) // 2) % 2 else 1
            assert reversion(b.as_multivector(), g) == b.as_multivector(sign)


def test_reversion_fixes_low_grades():
    B = _split_form(4)
    assert reversion(Multivector.unit(4), B) == Multivector.unit(4)
    for i in range(1, 5):
        assert reversion(bmv(4, i), B) == bmv(4, i)

"""Blades, reorder, wedge product, grade operations."""

import random
from fractions import Fraction

import pytest

from grassclif import Blade, Multivector, cbasis, random_polynomial, reorder, wedge, wedge_n

from support import blade, bmv, mv, sym


def test_reorder_descending_triple():
    sign, b = reorder(3, [3, 2, 1])
    assert sign == -1
    assert b == blade(3, 1, 2, 3)


def test_reorder_sorted_is_positive():
    sign, b = reorder(3, [1, 2])
    assert sign == 1
    assert b == blade(3, 1, 2)


def test_reorder_repeated_index_is_zero():
    sign, b = reorder(3, [1, 1])
    assert sign == 0
    assert b is None


def test_reorder_rejects_out_of_range():
    with pytest.raises(ValueError):
        reorder(3, [4])


def test_reorder_sign_multiplicative():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(2, 6)
        seq = list(range(1, n + 1))
        rng.shuffle(seq)
        mid = rng.sample(range(n), 2)
        swapped = list(seq)
        swapped[mid[0]], swapped[mid[1]] = swapped[mid[1]], swapped[mid[0]]
        s1, _ = reorder(6, seq)
        s2, _ = reorder(6, swapped)
        assert s1 == -s2  # one transposition flips the parity


def test_wedge_of_vectors():
    assert wedge(bmv(2, 1), bmv(2, 2)) == bmv(2, 1, 2)


def test_wedge_shared_index_vanishes():
    assert wedge(bmv(3, 1, 2), bmv(3, 2, 3)).is_zero()


def test_wedge_unit_law():
    rng = random.Random(3)
    for _ in range(20):
        u = random_polynomial(rng, 4, 3)
        assert wedge(Multivector.unit(4), u) == u
        assert wedge(u, Multivector.unit(4)) == u


def test_wedge_dimension_mismatch():
    with pytest.raises(ValueError):
        wedge(bmv(2, 1), bmv(3, 1))


def test_wedge_n_variadic():
    assert wedge_n(bmv(3, 1), bmv(3, 2), bmv(3, 3)) == bmv(3, 1, 2, 3)
    u = mv(3, ((1,), 2), ((2, 3), -1))
    assert wedge_n(u) == u
    assert wedge_n(bmv(3, 1), bmv(3, 2), bmv(3, 1)).is_zero()


def test_wedge_associative_and_graded_anticommutative():
    rng = random.Random(11)
    for _ in range(40):
        u = random_polynomial(rng, 4, 2)
        v = random_polynomial(rng, 4, 2)
        z = random_polynomial(rng, 4, 2)
        assert wedge(wedge(u, v), z) == wedge(u, wedge(v, z))
    for a in cbasis(3):
        for b in cbasis(3):
            lhs = wedge(a.as_multivector(), b.as_multivector())
            rhs = wedge(b.as_multivector(), a.as_multivector())
            sign = -1 if (a.grade * b.grade) % 2 else 1
            assert lhs == rhs.scale(sign)


def test_cbasis_dim3_order():
    names = [str(b) for b in cbasis(3)]
    assert names == ["Id", "e1", "e2", "e3", "e1we2", "e1we3", "e2we3", "e1we2we3"]


def test_grade_part():
    u = mv(3, ((), 1), ((1,), 1), ((2, 3), -3))
    assert u.grade_part(2) == mv(3, ((2, 3), -3))
    assert u.grade_part(1) == mv(3, ((1,), 1))
    total = Multivector.zero(3)
    for k in range(4):
        total = total + u.grade_part(k)
    assert total == u
    assert bmv(3, 1, 2).grade_part(1).is_zero()
    with pytest.raises(ValueError):
        u.grade_part(5)


def test_gradeinv():
    assert bmv(3, 1).gradeinv() == -bmv(3, 1)
    assert bmv(3, 1, 2).gradeinv() == bmv(3, 1, 2)
    rng = random.Random(5)
    for _ in range(20):
        u = random_polynomial(rng, 4, 4)
        v = random_polynomial(rng, 4, 3)
        assert u.gradeinv().gradeinv() == u
        assert wedge(u, v).gradeinv() == wedge(u.gradeinv(), v.gradeinv())


def test_blade_validation():
    with pytest.raises(ValueError):
        Blade.from_indices(3, (2, 1))
    with pytest.raises(ValueError):
        Blade.from_indices(3, (1, 4))
    with pytest.raises(ValueError):
        Blade(0, 0)
    with pytest.raises(ValueError):
        Blade(10, 0)


def test_blade_text_forms():
    b = blade(4, 1, 2, 4)
    assert str(b) == "e1we2we4"
    assert b.alias() == "e124"
    assert str(Blade.unit(4)) == "Id"


def test_multivector_text():
    u = mv(3, ((), 2), ((1,), 1), ((2, 3), -3))
    assert str(u) == "2*Id + e1 - 3*e2we3"
    assert str(Multivector.zero(3)) == "0"
    w = mv(2, ((1, 2), Fraction(1, 2)))
    assert str(w) == "1/2*e1we2"
    x = Multivector.unit(2, sym("g12") + sym("F12"))
    assert str(x) == "(F12+g12)*Id"

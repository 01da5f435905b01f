import math

import pytest

from stalg.coxeter import (
    LowerIdeal,
    RootSystem,
    all_lower_ideals,
    bruhat_interval_size,
    bruhat_leq,
    ideal_arrangement,
    ideal_exponents,
    inversion_arrangement,
    lowest_invariant,
    parse_permutation,
    weyl_arrangement,
)
from stalg.logder import is_free
from stalg.stalgebra import st_algebra, verify_eta


def test_root_counts():
    assert len(RootSystem("A", 3).positive_roots) == 6
    assert len(RootSystem("B", 2).positive_roots) == 4
    assert len(RootSystem("C", 3).positive_roots) == 9
    assert len(RootSystem("D", 4).positive_roots) == 12


def test_heights():
    A2 = RootSystem("A", 2)
    assert sorted(A2.height(r) for r in A2.positive_roots) == [1, 1, 2]
    B2 = RootSystem("B", 2)
    assert sorted(B2.height(r) for r in B2.positive_roots) == [1, 1, 2, 3]


def test_simple_roots_have_height_one():
    for letter, rank in (("A", 3), ("B", 3), ("C", 3), ("D", 4)):
        rs = RootSystem(letter, rank)
        assert all(rs.height(a) == 1 for a in rs.simple_roots)


def test_ideal_exponents_empty():
    A2 = RootSystem("A", 2)
    assert ideal_exponents(LowerIdeal(A2, [])) == [0, 0]


def test_ideal_exponents_full_a2():
    A2 = RootSystem("A", 2)
    assert ideal_exponents(LowerIdeal(A2, A2.positive_roots)) == [1, 2]


def test_ideal_exponents_simples_a3():
    A3 = RootSystem("A", 3)
    assert ideal_exponents(LowerIdeal(A3, A3.simple_roots)) == [1, 1, 1]


def test_lower_ideal_validation():
    A2 = RootSystem("A", 2)
    highest = [r for r in A2.positive_roots if A2.height(r) == 2]
    with pytest.raises(ValueError):
        LowerIdeal(A2, highest)


def test_lower_ideal_counts():
    assert len(all_lower_ideals(RootSystem("A", 2))) == 5
    assert len(all_lower_ideals(RootSystem("A", 3))) == 14
    assert len(all_lower_ideals(RootSystem("B", 2))) == 6


def test_weyl_arrangements():
    A2 = weyl_arrangement("A", 2)
    assert A2.size == 3 and A2.nvars == 3
    assert is_free(A2).exponents == [0, 1, 2]
    B2 = weyl_arrangement("B", 2)
    assert B2.size == 4
    assert is_free(B2).exponents == [1, 3]


def test_every_ideal_is_free_with_dual_partition_exponents():
    for letter, rank in (("A", 2), ("B", 2)):
        rs = RootSystem(letter, rank)
        pad = rs.dim - rs.rank
        for ideal in all_lower_ideals(rs):
            A = ideal_arrangement(ideal)
            rep = is_free(A)
            assert rep.free
            assert sorted(rep.exponents) == sorted(
                ideal_exponents(ideal) + [0] * pad
            )


def test_permutation_parsing():
    assert parse_permutation("4123") == (4, 1, 2, 3)
    with pytest.raises(ValueError):
        parse_permutation("4120")


def test_inversion_examples():
    assert inversion_arrangement("1234").size == 0
    assert inversion_arrangement("4321").size == 6
    A = inversion_arrangement("4123")
    assert [h.form.str(A.names) for h in A.hyperplanes] == [
        "x1 - x2",
        "x1 - x3",
        "x1 - x4",
    ]


def test_bruhat_examples():
    assert bruhat_interval_size("1234") == 1
    assert bruhat_interval_size("4321") == 24
    assert bruhat_interval_size("4123") == 8
    assert bruhat_leq("1234", "4123")
    assert not bruhat_leq("4321", "4123")


def test_bruhat_product_for_4123():
    rep = is_free(inversion_arrangement("4123"))
    assert rep.free
    assert math.prod(1 + d for d in rep.exponents) == 8


def test_lowest_invariant_validates_everywhere():
    for letter, rank in (("A", 2), ("B", 2)):
        A = weyl_arrangement(letter, rank)
        spec = verify_eta(A, lowest_invariant(letter, rank))
        assert spec.valid


def test_ideal_st_hilbert_is_the_exponent_product():
    # Hilb(ST(A_I, P1)) = prod(1 + x + ... + x^(d_i)) over the dual-partition
    # exponents, for a sample of lower ideals of A3
    from stalg.coxeter import lowest_invariant as p1
    from stalg.poly import upoly_mul

    rs = RootSystem("A", 3)
    ideals = all_lower_ideals(rs)
    for ideal in (ideals[0], ideals[5], ideals[-1]):
        A = ideal_arrangement(ideal)
        st = st_algebra(A, p1(4))
        expected = [1]
        for d in ideal_exponents(ideal):
            expected = upoly_mul(expected, [1] * (d + 1))
        assert st.hilbert_vector == expected, ideal


def test_weyl_st_is_the_coinvariant_hilbert_series():
    # Hilb(ST(A_W, P1)) = prod(1 + x + ... + x^(d_i)) for the Weyl exponents
    from stalg.poly import upoly_mul

    A = weyl_arrangement("A", 2)
    st = st_algebra(A, lowest_invariant("A", 2))
    assert st.hilbert_vector == upoly_mul([1, 1], [1, 1, 1])  # S_3 coinvariants
    B = weyl_arrangement("B", 2)
    stb = st_algebra(B, lowest_invariant("B", 2))
    assert stb.hilbert_vector == upoly_mul([1, 1], [1, 1, 1, 1])

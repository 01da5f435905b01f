import pytest

from oracles import dim_span_degree, monomials_of_degree
from stalg.arr import Arrangement
from stalg.examples import get_example, schubert_presentation_4123
from stalg.gb import buchberger
from stalg.logder import solomon_terao_polynomial
from stalg.poly import Polynomial
from stalg.scalars import QQ
from stalg.stalgebra import (
    analyze,
    apply_derivation,
    apply_diff_operator,
    default_eta,
    exists_nilpotent_linear,
    macaulay_dual,
    restriction_map_check,
    socle_witness,
    st_algebra,
    verify_eta,
)


def squares(field, nvars, weights=None):
    weights = weights or [1] * nvars
    return Polynomial(
        field,
        nvars,
        {
            tuple(2 if j == i else 0 for j in range(nvars)): field(w)
            for i, w in enumerate(weights)
        },
    )


def test_default_eta_is_sum_of_squares():
    A = get_example("ex4")
    spec = default_eta(A, 2)
    assert spec.eta == squares(QQ, 3)
    assert spec.valid


def test_eta_q_rejected():
    # eta = Q(A) = xy for the boolean plane: a(A, Q) = (Q), never finite
    A = get_example("boolean-2")
    Q = A.defining_polynomial()
    spec = verify_eta(A, Q)
    assert not spec.valid
    assert len(spec.failing_elements()) == 2  # both lines


def test_eta_degenerate_on_a_line():
    A = Arrangement(QQ, 2, [[1, 0], [1, 1]])
    xy = Polynomial(QQ, 2, {(1, 1): QQ(1)})
    spec = verify_eta(A, xy)
    assert not spec.valid


def test_eta_cubic_single_variable():
    A = Arrangement(QQ, 1, [[1]])
    spec = verify_eta(A, Polynomial(QQ, 1, {(3,): QQ(1)}))
    assert spec.valid


def test_st_boolean_two():
    A = get_example("boolean-2")
    st = st_algebra(A, squares(QQ, 2))
    assert st.hilbert_vector == [1, 2, 1]
    assert sorted(g.str() for g in st.ideal_generators) == ["2*x^2", "2*y^2"]


def test_st_ex4():
    A = get_example("ex4")
    st = st_algebra(A, default_eta(A, 2))
    assert st.hilbert_vector == [1, 3, 5, 4, 1]


def test_st_notsplit_with_printed_generators():
    A = get_example("notsplit")
    K = A.field
    st = st_algebra(A, default_eta(A, 2))
    assert st.hilbert_vector == [1, 3, 5, 6, 6, 6, 4, 1]
    rep = analyze(st)
    assert not rep.palindromic and not rep.complete_intersection
    x, y, z = (Polynomial.variable(K, 3, i) for i in range(3))
    for g in (
        x**2 + y**2 + z**2,
        z**3 - y * z**2,
        y**6 - y**5 * z,
        y**6 + 3 * y**4 * z**2,
    ):
        assert not st.gb.normal_form(g)


def test_st_rejects_degenerate_eta():
    A = get_example("boolean-2")
    with pytest.raises(ValueError):
        st_algebra(A, A.defining_polynomial())


def test_analyze_boolean_two():
    st = st_algebra(get_example("boolean-2"), squares(QQ, 2))
    rep = analyze(st)
    assert rep.complete_intersection
    assert rep.gorenstein and rep.palindromic and rep.slp_established
    assert rep.recovered_exponents == [1, 1]
    assert rep.socle_degree_conjecture


def test_analyze_ex4_negative():
    st = st_algebra(get_example("ex4"), squares(QQ, 3))
    rep = analyze(st)
    assert not rep.gorenstein
    assert not rep.palindromic
    assert not rep.complete_intersection
    assert rep.quantum_exponents is None


def test_scalar_multiples_of_eta_give_the_same_ideal():
    A = get_example("pencil-3")
    st1 = st_algebra(A, squares(QQ, 2))
    st5 = st_algebra(A, 5 * squares(QQ, 2))
    assert [g.component(0).monic() for g in st1.gb] == [
        g.component(0).monic() for g in st5.gb
    ]


def test_eta_independence_of_hilbert_vector():
    # tame case: two valid etas of the same degree, identical Hilbert vectors
    for name in ("ex4", "pencil-3", "boolean-3"):
        A = get_example(name)
        st1 = st_algebra(A, squares(A.field, A.nvars))
        st2 = st_algebra(A, squares(A.field, A.nvars, list(range(1, A.nvars + 1))))
        assert st1.hilbert_vector == st2.hilbert_vector, name


def test_socle_witness_empty():
    A = Arrangement(QQ, 2, [])
    st = st_algebra(A, squares(QQ, 2))
    w = socle_witness(st)
    assert w.normal_form == Polynomial.constant(QQ, 2, 4)
    assert w.nonzero and w.in_socle


def test_socle_witness_boolean_two():
    st = st_algebra(get_example("boolean-2"), squares(QQ, 2))
    w = socle_witness(st)
    assert w.normal_form == Polynomial(QQ, 2, {(1, 1): QQ(4)})
    assert w.nonzero and w.in_socle


def test_socle_witness_ex4_top_degree():
    st = st_algebra(get_example("ex4"), squares(QQ, 3))
    w = socle_witness(st)
    assert w.nonzero and w.in_socle
    assert w.normal_form.degree() == st.top_degree == 4


def test_macaulay_dual_linear_ideal():
    A = Arrangement(QQ, 2, [])
    st = st_algebra(A, squares(QQ, 2))
    assert macaulay_dual(st) == Polynomial.constant(QQ, 2, 1)


def test_macaulay_dual_monomial_ci():
    st = st_algebra(get_example("boolean-2"), squares(QQ, 2))
    dual = macaulay_dual(st)
    assert dual == Polynomial(QQ, 2, {(1, 1): QQ(1)})


def test_macaulay_dual_three_lines():
    st = st_algebra(get_example("pencil-3"), squares(QQ, 2))
    dual = macaulay_dual(st)
    assert dual.degree() == 3
    for g in st.ideal_generators:
        assert apply_diff_operator(g, dual).is_zero()


def test_macaulay_dual_requires_gorenstein():
    st = st_algebra(get_example("ex4"), squares(QQ, 3))
    with pytest.raises(ValueError):
        macaulay_dual(st)


def test_nilpotent_linear_monomial_ci():
    st = st_algebra(get_example("boolean-2"), squares(QQ, 2))
    v = exists_nilpotent_linear(st.gb)
    assert v == Polynomial.variable(QQ, 2, 0)


def test_nilpotent_linear_schubert_vs_st():
    pres = buchberger(schubert_presentation_4123())
    v = exists_nilpotent_linear(pres)
    assert v is not None
    assert not pres.normal_form(v * v)
    assert pres.normal_form(v)
    x = [Polynomial.variable(QQ, 4, i) for i in range(4)]
    elem = x[0] + x[1] + x[2]
    assert not pres.normal_form(elem * elem)

    A = get_example("inversion-4123")
    st = st_algebra(A, squares(QQ, 4))
    assert exists_nilpotent_linear(st.gb) is None


def test_restriction_map_boolean():
    A = get_example("boolean-2")
    spec = verify_eta(A, squares(QQ, 2))
    rep = restriction_map_check(A, [1, 0], spec)
    assert rep.eta_valid_on_deletion and rep.eta_valid_on_restriction
    assert rep.well_defined and rep.surjective and rep.composite_zero
    assert rep.restricted_hilbert_vector == [1, 1]


def test_restriction_map_ex4():
    A = get_example("ex4")
    rep = restriction_map_check(A, [1, 1, 1], default_eta(A, 2))
    assert rep.surjective and rep.composite_zero and rep.well_defined
    assert rep.restricted_hilbert_vector == [1, 2, 2, 1]


def test_restriction_maps_on_corpus_pairs():
    for name in ("boolean-3", "pencil-3"):
        A = get_example(name)
        spec = default_eta(A, 2)
        for h in A.hyperplanes:
            rep = restriction_map_check(A, h, spec)
            assert rep.well_defined and rep.surjective and rep.composite_zero


def test_restriction_map_over_extension_field():
    A = get_example("notsplit")
    rep = restriction_map_check(A, [0, 0, 1], default_eta(A, 2))
    assert rep.eta_valid_on_deletion and rep.eta_valid_on_restriction
    assert rep.well_defined and rep.surjective and rep.composite_zero
    # A^{z=0} is six concurrent lines: free with exponents (1,5)
    assert rep.restricted_hilbert_vector == [1, 2, 2, 2, 2, 2, 1]


def test_ideal_dimensions_match_oracle():
    for name in ("boolean-2", "pencil-3", "ex4"):
        A = get_example(name)
        st = st_algebra(A, squares(A.field, A.nvars))
        for d in range(9):
            full = len(monomials_of_degree(A.nvars, d))
            hv = st.hilbert_vector[d] if d <= st.top_degree else 0
            assert full - hv == dim_span_degree(st.ideal_generators, d), (name, d)


def test_hilbert_vector_equals_psi_at_t_one():
    for name in ("ex4", "pencil-3", "boolean-3", "notsplit"):
        A = get_example(name)
        st = st_algebra(A, default_eta(A, 2))
        assert st.hilbert_vector == solomon_terao_polynomial(A).substitute_t([1]), name


def test_degree_four_eta():
    A = get_example("pencil-3")
    eta = Polynomial(QQ, 2, {(4, 0): QQ(1), (0, 4): QQ(1)})
    spec = verify_eta(A, eta)
    assert spec.valid
    st = st_algebra(A, spec)
    rep = analyze(st)
    assert rep.complete_intersection
    assert rep.quantum_exponents == [3, 4]
    assert rep.recovered_exponents == [1, 2]
    assert rep.socle_degree == 7 == A.size + 2 * (4 - 2)
    assert rep.socle_degree_conjecture


def test_ci_implies_quantum_factorable():
    # one direction of the conjectural equivalence is a theorem; assert it
    for name in ("boolean-3", "pencil-3", "braid-3", "ex4", "notsplit"):
        A = get_example(name)
        st = st_algebra(A, default_eta(A, 2))
        rep = analyze(st)
        if rep.complete_intersection:
            assert rep.quantum_exponents is not None, name
            assert sum(rep.quantum_exponents) == st.top_degree == A.size, name


def test_derivation_application():
    A = get_example("pencil-3")
    from stalg.logder import log_derivations

    dm = log_derivations(A, 1)
    eta = squares(QQ, 2)
    images = [apply_derivation(t, eta) for t in dm.generators]
    assert all(g.is_homogeneous() for g in images)
    assert sorted(g.degree() for g in images) == [2, 3]

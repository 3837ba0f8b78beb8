from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from modernsets import (
    DomainError,
    RationalMatrix,
    ShapeError,
    StructuralError,
    chain_algebra,
    classical_algebra,
    find_noncommuting_witness,
    fuzzy_algebra,
    lattice_algebra,
    m3_lattice,
    matrix_algebra,
    matrix_vee,
    matrix_wedge,
    normalize_matrix,
    powerset_lattice,
)

E01 = RationalMatrix([[0, 1], [0, 0]])
E10 = RationalMatrix([[0, 0], [1, 0]])
I2 = RationalMatrix.identity(2)
Z2 = RationalMatrix.zeros(2)


class TestNormalize:
    def test_identity_multiples_collapse(self):
        assert normalize_matrix(I2.scale(2)) == I2
        assert normalize_matrix(I2.scale(5)) == I2
        assert normalize_matrix(I2) == I2

    def test_non_multiples_pass_through(self):
        half = I2.scale(Fraction(1, 2))
        assert normalize_matrix(half) == half
        assert normalize_matrix(Z2) == Z2
        assert normalize_matrix(E01) == E01
        neg = I2.scale(-3)
        assert normalize_matrix(neg) == neg

    def test_fractional_multiple_passes_through(self):
        m = I2.scale(Fraction(3, 2))
        assert normalize_matrix(m) == m

    @given(
        st.lists(
            st.lists(
                st.fractions(min_value=-3, max_value=3, max_denominator=4),
                min_size=2, max_size=2,
            ),
            min_size=2, max_size=2,
        )
    )
    def test_idempotent(self, rows):
        once = normalize_matrix(RationalMatrix(rows))
        assert normalize_matrix(once) == once


class TestMatrixOps:
    def test_wedge_is_normalized_product(self):
        assert matrix_wedge(E01, E10) == RationalMatrix([[1, 0], [0, 0]])
        assert matrix_wedge(E10, E01) == RationalMatrix([[0, 0], [0, 1]])

    def test_vee_is_normalized_sum(self):
        assert matrix_vee(I2, I2) == I2
        assert matrix_vee(I2, E01) == RationalMatrix([[1, 1], [0, 1]])

    def test_rejects_non_matrices(self):
        with pytest.raises(DomainError):
            matrix_wedge(I2, 1)
        with pytest.raises(DomainError):
            matrix_vee("x", I2)

    def test_rejects_unnormalized_inputs(self):
        with pytest.raises(DomainError):
            matrix_wedge(I2.scale(2), I2)
        with pytest.raises(DomainError):
            matrix_vee(I2, I2.scale(3))

    def test_rejects_shape_mismatch(self):
        with pytest.raises(ShapeError):
            matrix_wedge(I2, RationalMatrix.identity(3))


class TestMatrixAlgebra:
    def test_membership(self):
        m = matrix_algebra(2)
        assert m.is_member(I2)
        assert m.is_member(Z2)
        assert m.is_member(E01)
        assert m.is_member(I2.scale(Fraction(1, 2)))
        assert not m.is_member(I2.scale(2))
        assert not m.is_member(RationalMatrix.identity(3))
        assert not m.is_member("I")

    def test_bounds_and_boundary(self):
        m = matrix_algebra(2)
        assert m.zero == Z2
        assert m.one == I2
        assert E01 in m.boundary and E10 in m.boundary

    def test_sampler_yields_members(self):
        import random

        m = matrix_algebra(3)
        rng = random.Random(7)
        for _ in range(50):
            assert m.is_member(m.sample(rng))

    def test_no_order_no_complement(self):
        m = matrix_algebra(2)
        assert m.complement is None
        assert m.leq is None
        assert m.lattice is None

    def test_size_validation(self):
        with pytest.raises(ValueError):
            matrix_algebra(0)

    def test_cached(self):
        assert matrix_algebra(2) is matrix_algebra(2)


class TestNoncommutingWitness:
    def test_mat2_wedge_witness_is_deterministic(self):
        w = find_noncommuting_witness(matrix_algebra(2), op="wedge")
        assert w is not None
        assert w.inputs == (E01, E10)
        assert w.lhs == RationalMatrix([[1, 0], [0, 0]])
        assert w.rhs == RationalMatrix([[0, 0], [0, 1]])

    def test_witness_recheck(self):
        m = matrix_algebra(2)
        w = find_noncommuting_witness(m, op="wedge")
        x, y = w.inputs
        assert m.wedge(x, y) == w.lhs
        assert m.wedge(y, x) == w.rhs
        assert w.lhs != w.rhs

    def test_mat3_has_witness(self):
        m = matrix_algebra(3)
        w = find_noncommuting_witness(m, op="wedge")
        assert w is not None
        x, y = w.inputs
        assert m.wedge(x, y) != m.wedge(y, x)

    def test_commutative_algebras_have_none(self):
        assert find_noncommuting_witness(classical_algebra()) is None
        assert find_noncommuting_witness(chain_algebra(3)) is None
        assert find_noncommuting_witness(fuzzy_algebra(), budget=400) is None
        assert find_noncommuting_witness(matrix_algebra(2), op="vee") is None

    def test_bad_op(self):
        with pytest.raises(ValueError):
            find_noncommuting_witness(matrix_algebra(2), op="plus")


class TestChainAlgebras:
    def test_tokens(self):
        assert chain_algebra(2).elements == ("O", "I")
        assert chain_algebra(3).elements == ("O", "m", "I")
        assert chain_algebra(5).elements == ("O", "m1", "m2", "m3", "I")

    def test_ops_are_min_max(self):
        a = chain_algebra(5)
        order = {t: i for i, t in enumerate(a.elements)}
        for x in a.elements:
            for y in a.elements:
                assert order[a.wedge(x, y)] == min(order[x], order[y])
                assert order[a.vee(x, y)] == max(order[x], order[y])

    def test_complement_reverses_order(self):
        a = chain_algebra(5)
        assert a.complement("O") == "I"
        assert a.complement("m1") == "m3"
        assert a.complement("m2") == "m2"

    def test_too_short(self):
        with pytest.raises(ValueError):
            chain_algebra(1)


def test_classical_algebra_truth_tables():
    a = classical_algebra()
    assert a.wedge("I", "I") == "I"
    assert a.wedge("I", "O") == "O"
    assert a.vee("O", "O") == "O"
    assert a.vee("O", "I") == "I"
    assert a.complement("O") == "I"
    assert a.complement("I") == "O"
    assert a.structure == "classical"
    assert a.lattice is not None


class TestFuzzyAlgebra:
    def test_membership(self):
        a = fuzzy_algebra()
        assert a.is_member(Fraction(1, 2))
        assert a.is_member(Fraction(0))
        assert a.is_member(Fraction(1))
        assert not a.is_member(Fraction(3, 2))
        assert not a.is_member(Fraction(-1, 4))
        assert not a.is_member(0.5)

    def test_ops(self):
        a = fuzzy_algebra()
        assert a.wedge(Fraction(1, 3), Fraction(2, 3)) == Fraction(1, 3)
        assert a.vee(Fraction(1, 3), Fraction(2, 3)) == Fraction(2, 3)
        assert a.complement(Fraction(3, 10)) == Fraction(7, 10)

    def test_complement_is_involutive(self):
        a = fuzzy_algebra()
        for v in (Fraction(0), Fraction(1, 7), Fraction(1, 2), Fraction(1)):
            assert a.complement(a.complement(v)) == v

    def test_boundary_and_order(self):
        a = fuzzy_algebra()
        assert Fraction(0) in a.boundary and Fraction(1) in a.boundary
        assert a.leq(Fraction(1, 4), Fraction(1, 2))
        assert not a.leq(Fraction(1, 2), Fraction(1, 4))

    def test_sampler_in_range(self):
        import random

        a = fuzzy_algebra()
        rng = random.Random(3)
        for _ in range(100):
            assert a.is_member(a.sample(rng))


class TestLatticeAlgebra:
    def test_wraps_ops(self):
        a = lattice_algebra(m3_lattice())
        assert a.wedge("a", "b") == "0"
        assert a.vee("a", "b") == "1"
        assert a.zero == "0"
        assert a.one == "1"
        assert a.finite

    def test_complement_mapping(self):
        comp = {"0": "ab", "a": "b", "b": "a", "ab": "0"}
        a = lattice_algebra(powerset_lattice(2), complement=comp)
        assert a.complement("a") == "b"

    def test_complement_callable(self):
        comp = {"0": "ab", "a": "b", "b": "a", "ab": "0"}
        a = lattice_algebra(powerset_lattice(2), complement=comp.__getitem__)
        assert a.complement("ab") == "0"

    def test_incomplete_mapping_rejected(self):
        with pytest.raises(StructuralError):
            lattice_algebra(powerset_lattice(2), complement={"0": "ab"})

    def test_single_element_rejected(self):
        from modernsets import lattice_from_hasse

        trivial = lattice_from_hasse("one", ["e"], [])
        with pytest.raises(StructuralError):
            lattice_algebra(trivial)

    def test_custom_name(self):
        a = lattice_algebra(m3_lattice(), name="diamond")
        assert a.name == "diamond"

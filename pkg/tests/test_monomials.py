"""Monomial and basis enumeration behavior."""

import pytest
from hypothesis import given, strategies as st

from monwlp.monomials import (
    DegreeBasis,
    Monomial,
    canonical_sort,
    degree_slice,
    enumerate_basis,
    monomial_str,
    parse_monomial,
)


class TestMonomial:
    def test_degree_sums_exponents(self):
        m = Monomial((1, 2, 0))
        assert m.degree == 3
        assert m.n == 3

    def test_pure_power_detection(self):
        assert Monomial((0, 3, 0)).is_pure_power()
        assert Monomial((4,)).is_pure_power()
        assert not Monomial((1, 2, 0)).is_pure_power()
        assert not Monomial((0, 0, 0)).is_pure_power()

    def test_multiply_raises_one_exponent(self):
        m = Monomial((1, 0, 2))
        assert m.multiply(2) == Monomial((1, 1, 2))

    def test_lower_divides_by_one_variable(self):
        m = Monomial((1, 0, 2))
        assert m.lower(1) == Monomial((0, 0, 2))
        with pytest.raises(ValueError):
            m.lower(2)

    def test_divides_componentwise(self):
        assert Monomial((1, 0, 1)).divides(Monomial((2, 0, 1)))
        assert not Monomial((1, 1, 0)).divides(Monomial((2, 0, 1)))

    def test_permute_relabels_variables(self):
        # new variable j carries the exponent of old variable perm[j-1]
        m = Monomial((2, 1, 0))
        assert m.permute((3, 1, 2)) == Monomial((0, 2, 1))
        assert m.permute((1, 2, 3)) == m

    def test_permute_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            Monomial((1, 0)).permute((1, 1))


class TestStringForms:
    def test_monomial_str_examples(self):
        assert monomial_str(Monomial((2, 0, 1))) == "x1^2*x3"
        assert monomial_str(Monomial((0, 1, 0))) == "x2"
        assert monomial_str(Monomial((0, 0, 0))) == "1"

    def test_parse_examples(self):
        assert parse_monomial("x1^2*x3", 3) == Monomial((2, 0, 1))
        assert parse_monomial("x2", 3) == Monomial((0, 1, 0))
        assert parse_monomial("1", 2) == Monomial((0, 0))

    def test_parse_rejects_out_of_range_variable(self):
        with pytest.raises(ValueError):
            parse_monomial("x4", 3)

    @given(
        st.integers(min_value=1, max_value=5).flatmap(
            lambda n: st.tuples(*[st.integers(min_value=0, max_value=6)] * n)
        )
    )
    def test_parse_str_roundtrip(self, exps):
        m = Monomial(exps)
        assert parse_monomial(monomial_str(m), m.n) == m


class TestBasisEnumeration:
    def test_ternary_quadratics(self):
        basis = enumerate_basis(3, 2)
        assert len(basis) == 6
        assert [m.exponents for m in basis] == [
            (2, 0, 0),
            (1, 1, 0),
            (1, 0, 1),
            (0, 2, 0),
            (0, 1, 1),
            (0, 0, 2),
        ]

    def test_order_is_descending_lex(self):
        basis = enumerate_basis(3, 3)
        exps = [m.exponents for m in basis]
        assert exps == sorted(exps, reverse=True)
        assert exps == [m.exponents for m in canonical_sort(basis.monomials)]

    def test_index_lookup_is_consistent(self):
        basis = enumerate_basis(4, 3)
        assert len(basis) == 20
        for i, m in enumerate(basis):
            assert basis.index_of(m) == i

    def test_degree_slice_filters_by_exponent(self):
        basis = enumerate_basis(3, 4)
        sliced = degree_slice(basis, 1, 2)
        assert all(m.deg_i(1) == 2 for m in sliced)
        assert len(sliced) == 3

    @given(
        st.integers(min_value=1, max_value=4),
        st.integers(min_value=0, max_value=6),
    )
    def test_basis_size_is_binomial(self, n, d):
        from math import comb

        assert len(enumerate_basis(n, d)) == comb(n + d - 1, d)

    def test_basis_caching_returns_same_object(self):
        assert enumerate_basis(3, 5) is enumerate_basis(3, 5)

"""Cyclic group actions: fixed monomials, generator counts, and failure witnesses."""

import random
from math import gcd

import pytest
from hypothesis import given, strategies as st

from monwlp.cyclic import (
    CyclicAction,
    canonical_action_classes,
    count_fixed,
    count_fixed_formula,
    cross_validate_dichotomy,
    fixed_monomials,
    injectivity_witness,
    invariant_ideal,
    is_fixed,
    mu_upper_bound_3vars,
    mu_upper_bound_check_4vars,
    scan_3vars,
    smallest_prime_factor,
    surjectivity_witness_distinct,
    surjectivity_witness_two_block,
    wlp_prediction,
)
from monwlp.monomials import Monomial


class TestFixedCounts:
    def test_formula_anchors(self):
        assert count_fixed_formula(CyclicAction(15, (0, 0, 0))) == 136
        assert count_fixed_formula(CyclicAction(10, (0, 2, 4))) == 14
        assert count_fixed_formula(CyclicAction(3, (0, 1, 2))) == 4

    def test_formula_matches_enumeration_on_anchors(self):
        for order, a in [(15, (0, 0, 0)), (10, (0, 2, 4)), (3, (0, 1, 2)), (8, (1, 2, 5))]:
            action = CyclicAction(order, a)
            assert count_fixed_formula(action) == count_fixed(action)

    def test_fixed_monomial_membership(self):
        action = CyclicAction(6, (0, 2, 4))
        for m in fixed_monomials(action, 6):
            assert is_fixed(action, m)
            assert sum(w * e for w, e in zip(action.a, m.exponents)) % 6 == 0

    def test_invariant_ideal_of_balanced_action(self):
        ideal = invariant_ideal(CyclicAction(3, (0, 1, 2)))
        assert [str(g) for g in ideal.generators] == ["x1^3", "x1*x2*x3", "x2^3", "x3^3"]
        assert ideal.mu == 4

    @given(
        st.integers(min_value=0, max_value=2 ** 30),
        st.integers(min_value=2, max_value=12),
    )
    def test_fixed_set_invariant_under_shift_and_unit_scaling(self, seed, order):
        rng = random.Random(seed)
        a = tuple(rng.randrange(order) for _ in range(3))
        base = set(fixed_monomials(CyclicAction(order, a), order))
        shift = rng.randrange(order)
        shifted = tuple((x + shift) % order for x in a)
        assert set(fixed_monomials(CyclicAction(order, shifted), order)) == base
        unit = rng.choice([u for u in range(1, order) if gcd(u, order) == 1])
        scaled = tuple((unit * x) % order for x in a)
        assert set(fixed_monomials(CyclicAction(order, scaled), order)) == base

    @given(st.integers(min_value=0, max_value=2 ** 30))
    def test_fixed_set_permutes_with_the_weights(self, seed):
        rng = random.Random(seed)
        order = rng.randint(2, 10)
        a = tuple(rng.randrange(order) for _ in range(3))
        perm = tuple(rng.sample([1, 2, 3], 3))
        base = fixed_monomials(CyclicAction(order, a), order)
        permuted_a = tuple(a[p - 1] for p in perm)
        permuted = set(fixed_monomials(CyclicAction(order, permuted_a), order))
        assert {m.permute(perm) for m in base} == permuted


class TestScan:
    def test_full_grid_histogram_for_order_fifteen(self):
        report = scan_3vars(15)
        assert len(report.cells) == 225
        assert report.histogram == (
            (10, 24),
            (11, 72),
            (12, 24),
            (13, 48),
            (17, 24),
            (28, 12),
            (34, 12),
            (46, 2),
            (51, 6),
            (136, 1),
        )

    def test_small_generator_counts_need_coprime_weights(self):
        report = scan_3vars(15)
        threshold = 17
        for cell in report.cells:
            if cell.mu < threshold:
                assert cell.gcd_with_order == 1
            if cell.gcd_with_order > 1:
                assert cell.mu >= threshold

    def test_cell_count_matches_histogram_total(self):
        report = scan_3vars(15)
        assert sum(c for _, c in report.histogram) == len(report.cells)


class TestGeneratorBounds:
    def test_smallest_prime_factor(self):
        assert smallest_prime_factor(9) == 3
        assert smallest_prime_factor(15) == 3
        assert smallest_prime_factor(7) == 7
        assert smallest_prime_factor(2) == 2

    # (d, p, bound, max_mu, witness, sharp)
    BOUND_TABLE = [
        (7, 7, 9, 6, (0, 1, 2), False),
        (9, 3, 8, 8, (0, 1, 3), True),
        (10, 2, 10, 10, (0, 1, 5), True),
        (11, 11, 13, 8, (0, 1, 2), False),
        (12, 2, 11, 11, (0, 1, 4), True),
        (13, 13, 15, 9, (0, 1, 2), False),
        (15, 3, 13, 13, (0, 1, 6), True),
    ]

    @pytest.mark.parametrize("d,p,bound,max_mu,witness,sharp", BOUND_TABLE)
    def test_three_variable_upper_bound(self, d, p, bound, max_mu, witness, sharp):
        report = mu_upper_bound_3vars(d)
        assert report.p == p
        assert report.bound == bound
        assert report.max_mu == max_mu
        assert report.witness == witness
        assert report.all_within_bound
        assert report.sharp == sharp

    def test_sharpness_tracks_compositeness(self):
        for d in range(4, 21):
            report = mu_upper_bound_3vars(d)
            is_composite = smallest_prime_factor(d) < d
            assert report.sharp == is_composite, d

    def test_four_variable_bound_with_primitive_differences(self):
        for d in range(2, 9):
            assert mu_upper_bound_check_4vars(d)

    def test_four_variable_bound_fails_without_difference_condition(self):
        # with only pairwise-distinctness plus gcd(a, d) = 1 the bound is
        # violated at every even d from 4 on, e.g. weights (1, 1, 3, 3) at d = 4
        verdicts = {d: mu_upper_bound_check_4vars(d, primitive_differences=False) for d in range(2, 9)}
        assert {d for d, ok in verdicts.items() if not ok} == {4, 6, 8}


class TestWitnesses:
    def test_distinct_residue_witness_for_order_ten(self):
        action = CyclicAction(10, (0, 2, 4))
        w = surjectivity_witness_distinct(action)
        assert w.l == 7
        assert w.k == 3
        assert len(w.support) == 52
        assert w.paths_agree
        assert w.support_is_nonfixed_set
        assert w.coefficient_sum_zero
        assert w.annihilated
        assert w.verified

    def test_distinct_residue_paths_agree_across_small_orders(self):
        for order in range(3, 9):
            for a2 in range(1, order):
                for a3 in range(1, order):
                    if a3 == a2:
                        continue
                    w = surjectivity_witness_distinct(CyclicAction(order, (0, a2, a3)))
                    assert w.verified, (order, a2, a3)

    def test_product_witness_for_order_ten(self):
        action = CyclicAction(10, (0, 2, 4))
        w = injectivity_witness(action)
        assert w.verified
        assert w.dim_source == 55
        assert w.dim_target == 52
        assert w.product_lands_in_ideal
        assert w.nonzero

    def test_product_witness_degenerates_when_residues_coincide(self):
        with pytest.raises(ValueError):
            injectivity_witness(CyclicAction(5, (2, 2, 2)))

    def test_two_block_witness_for_order_six(self):
        w = surjectivity_witness_two_block(CyclicAction(6, (1, 1, 4, 4)))
        assert w.support_size == 12
        assert w.support_avoids_fixed
        assert w.annihilated
        assert w.verified


class TestDichotomy:
    def test_prediction_needs_nearly_constant_residues(self):
        assert wlp_prediction(CyclicAction(5, (0, 0, 1)))
        assert wlp_prediction(CyclicAction(7, (3, 3, 3)))
        assert not wlp_prediction(CyclicAction(5, (0, 1, 2)))
        assert not wlp_prediction(CyclicAction(6, (1, 1, 4, 4)))

    def test_action_class_counts(self):
        assert [len(canonical_action_classes(3, d)) for d in range(2, 9)] == [
            2, 3, 4, 3, 7, 4, 8,
        ]
        assert [len(canonical_action_classes(4, d)) for d in range(2, 5)] == [3, 4, 8]

    def test_classes_are_canonical_representatives(self):
        for rep in canonical_action_classes(3, 6):
            assert rep == tuple(sorted(rep))
            assert all(0 <= x < 6 for x in rep)

    @pytest.mark.parametrize("n,d", [(3, 2), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3)])
    def test_prediction_matches_direct_scan(self, n, d):
        report = cross_validate_dichotomy(n, d)
        assert report.mismatches == ()
        assert report.class_count == len(canonical_action_classes(n, d))
        for record in report.records:
            assert record.agrees

"""Dihedral-invariant ideals: generator counts, failure degrees, and sign counts."""

import pytest

from monwlp.dihedral import (
    dihedral_form,
    dihedral_ideal,
    dihedral_wlp_check,
    even_square_structure,
    injectivity_cofactor,
    mu_dihedral_check,
    s2_multiplicity_check,
)
from monwlp.forms import diff_by_ell


class TestGeneratorCounts:
    def test_count_alternates_by_parity(self):
        # odd d gives d + 3 generators, even d gives 2d + 5
        assert [dihedral_ideal(d).mu for d in range(2, 11)] == [
            9, 6, 13, 8, 17, 10, 21, 12, 25,
        ]

    @pytest.mark.parametrize("d", range(2, 11))
    def test_count_crosscheck_passes(self, d):
        assert mu_dihedral_check(d)

    def test_form_support_sizes(self):
        assert len(dihedral_form(2).support()) == 9
        assert len(dihedral_form(3).support()) == 6
        assert len(dihedral_form(4).support()) == 13

    def test_form_degree_and_variables(self):
        for d in range(2, 7):
            f = dihedral_form(d)
            assert f.n == 3
            assert f.degree == 2 * d
            assert not diff_by_ell(f).is_zero()


class TestSquareStructure:
    @pytest.mark.parametrize("d", [2, 4, 6, 8])
    def test_even_form_is_a_perfect_square(self, d):
        structure = even_square_structure(d)
        assert structure.square_matches
        assert structure.support_pattern_ok
        assert structure.signs_alternate
        assert structure.verified


class TestMaximalRankScan:
    def test_degree_two_holds(self):
        report = dihedral_wlp_check(2)
        assert report.mu == 9
        assert report.parity == "even"
        assert report.fails is False
        assert report.wlp.verdict
        assert report.dim_source == 10
        assert report.dim_target == 6
        assert report.failure_degree is None
        assert report.edge_case is not None
        assert "d=2" in report.edge_case

    # (d, mu, degree, mode, dim_source, dim_target)
    FAILURES = [
        (3, 6, 5, "injectivity", 21, 22),
        (4, 13, 7, "surjectivity", 36, 32),
        (5, 8, 9, "injectivity", 55, 58),
        (6, 17, 11, "surjectivity", 78, 74),
    ]

    @pytest.mark.parametrize("d,mu,degree,mode,ds,dt", FAILURES)
    def test_failure_location_and_mode(self, d, mu, degree, mode, ds, dt):
        report = dihedral_wlp_check(d)
        assert report.mu == mu
        assert report.fails
        assert not report.wlp.verdict
        assert report.failure_degree == degree
        assert report.failure_mode == mode
        assert report.dim_source == ds
        assert report.dim_target == dt

    @pytest.mark.parametrize("d", [3, 5])
    def test_odd_failures_carry_a_cofactor_certificate(self, d):
        report = dihedral_wlp_check(d)
        assert report.cofactor_verified
        assert report.togliatti_consistent
        assert not injectivity_cofactor(d).is_zero()

    @pytest.mark.parametrize("d", [1, 7, 11])
    def test_scan_range_is_bounded(self, d):
        with pytest.raises(ValueError):
            dihedral_wlp_check(d)


class TestSignCounts:
    # (d, source_total, source_swap_fixed, source_alternating,
    #  target_cobasis, target_swap_fixed, target_alternating, obstructed)
    TABLE = [
        (4, 36, 4, 16, 32, 0, 16, False),
        (6, 78, 6, 36, 74, 0, 37, True),
        (8, 136, 8, 64, 132, 0, 66, True),
    ]

    @pytest.mark.parametrize(
        "d,src,src_fix,src_alt,tgt,tgt_fix,tgt_alt,obstructed", TABLE
    )
    def test_alternating_multiplicities(
        self, d, src, src_fix, src_alt, tgt, tgt_fix, tgt_alt, obstructed
    ):
        record = s2_multiplicity_check(d)
        assert record.source_total == src
        assert record.source_swap_fixed == src_fix
        assert record.source_alternating == src_alt
        assert record.target_cobasis == tgt
        assert record.target_swap_fixed == tgt_fix
        assert record.target_alternating == tgt_alt
        assert record.surjectivity_obstructed == obstructed

    def test_alternating_closed_forms(self):
        for d in (4, 6, 8):
            record = s2_multiplicity_check(d)
            assert record.source_alternating == d * d
            assert record.target_alternating == (2 * d * d + d - 4) // 2

    def test_sign_count_argument_requires_even_degree(self):
        with pytest.raises(ValueError):
            s2_multiplicity_check(5)

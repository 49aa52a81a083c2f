"""Acceptance gate: twelve end-to-end criteria, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the report lines.
Each criterion prints its line before asserting, so a failure still leaves
the full diagnostic on screen.
"""

import itertools
import random
import time
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

import numpy as np

from monwlp.classify import classify, verify_listed_forms
from monwlp.cyclic import (
    CyclicAction,
    canonical_action_classes,
    count_fixed_formula,
    cross_validate_dichotomy,
    invariant_ideal,
    mu_upper_bound_3vars,
    mu_upper_bound_check_4vars,
    scan_3vars,
    smallest_prime_factor,
    surjectivity_witness_distinct,
    surjectivity_witness_two_block,
)
from monwlp.dihedral import (
    dihedral_form,
    dihedral_ideal,
    dihedral_wlp_check,
    s2_multiplicity_check,
)
from monwlp.forms import (
    LinearForm,
    PolyForm,
    depends_only_on_differences,
    diff_by_ell,
    diff_by_ell_power,
    expand_product,
    min_annihilator_exponent,
    support_census,
    translate_by_ones,
)
from monwlp.ideals import (
    MonomialIdeal,
    dual_kernel_forms,
    hilbert_function,
    mult_map_rows,
    wlp_check,
)
from monwlp.linalg import all_maximal_minors_nonzero, rank_int_rows, toeplitz
from monwlp.matroid import (
    SurMatroid,
    circuits,
    circuits_up_to,
    dim_bounds,
    girth_report,
    is_independent,
    matroid_rank,
)
from monwlp.monomials import enumerate_basis


def _report(number, ok, detail, started, budget=None):
    elapsed = time.perf_counter() - started
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {number}] {status} ({elapsed:.1f}s): {detail}")
    assert ok, f"criterion {number}: {detail}"
    if budget is not None:
        assert elapsed < budget, f"criterion {number} exceeded {budget}s ({elapsed:.1f}s)"


@lru_cache(maxsize=None)
def _census(n, d, extra):
    return classify(n, d, extra, processes=4)


def test_criterion_01_girth_values_certified_with_witnesses():
    t0 = time.perf_counter()
    expected = {(3, 3): 6, (3, 4): 10, (3, 5): 12, (4, 2): 4, (4, 3): 6, (5, 2): 4}
    problems = []
    checked_total = 0
    for (n, d), want in sorted(expected.items()):
        report = girth_report(SurMatroid.build(n, d), certify=True)
        checked_total += report.subsets_checked
        if report.girth != want:
            problems.append(f"girth({n},{d})={report.girth}, wanted {want}")
        if not report.certified:
            problems.append(f"girth({n},{d}) not certified below the bound")
        if report.witness is None or report.witness.size != want:
            problems.append(f"girth({n},{d}) missing a witness of size {want}")
    detail = (
        f"six girth values exact, {checked_total} below-bound subsets certified "
        f"independent, witnesses at the bound"
        if not problems
        else "; ".join(problems)
    )
    _report(1, not problems, detail, t0, budget=300)


def test_criterion_02_witness_support_counts():
    t0 = time.perf_counter()
    problems = []
    for d in range(3, 11):
        f = expand_product(
            [LinearForm(3, (1, -1, 0)).to_form(), LinearForm(3, (1, 0, -1)).to_form()]
            + [LinearForm(3, (0, 1, -1)).to_form()] * (d - 2)
        )
        want = 3 * d - 3 if d % 2 else 3 * d - 2
        if len(f.support()) != want:
            problems.append(f"3-variable d={d}: |supp|={len(f.support())}, wanted {want}")
    for d in range(2, 11):
        f = expand_product(
            [LinearForm(4, (1, -1, 0, 0)).to_form()]
            + [LinearForm(4, (0, 0, 1, -1)).to_form()] * (d - 1)
        )
        if len(f.support()) != 2 * d:
            problems.append(f"4-variable d={d}: |supp|={len(f.support())}, wanted {2 * d}")
    detail = (
        "support sizes 3d-3 (odd d), 3d-2 (even d), and 2d over d = 3..10 / 2..10"
        if not problems
        else "; ".join(problems)
    )
    _report(2, not problems, detail, t0, budget=1)


def test_criterion_03_classification_censuses_and_catalogs():
    t0 = time.perf_counter()
    problems = []
    small = _census(3, 5, 3)
    if (small.ideal_count, small.kernel_space_count, small.class_count) != (816, 25, 7):
        problems.append(
            f"(3,5,3) census = ({small.ideal_count}, {small.kernel_space_count}, "
            f"{small.class_count}), wanted (816, 25, 7)"
        )
    large = _census(4, 3, 6)
    if (large.ideal_count, large.kernel_space_count, large.class_count) != (8008, 237, 13):
        problems.append(
            f"(4,3,6) census = ({large.ideal_count}, {large.kernel_space_count}, "
            f"{large.class_count}), wanted (8008, 237, 13)"
        )
    for name, census in (("c1", small), ("c2", large)):
        catalog = verify_listed_forms(name, census=census)
        bad = [e.index for e in catalog.entries if not e.verified]
        if bad:
            problems.append(f"catalog {name}: entries {bad} failed verification")
    detail = (
        "(816, 25, 7) and (8008, 237, 13) with all 7 + 13 listed forms verified; "
        "the 237 counts kernel subspaces: 159 lines plus 78 planes"
        if not problems
        else "; ".join(problems)
    )
    _report(3, not problems, detail, t0, budget=600)


def test_criterion_04_circuit_census_and_dual_dimension():
    t0 = time.perf_counter()
    problems = []
    M = SurMatroid.build(3, 5)
    upto = circuits_up_to(M, 15)
    hist = dict(Counter(c.size for c in upto))
    if len(upto) != 25 or hist != {12: 7, 14: 6, 15: 12}:
        problems.append(f"circuits up to size 15: {len(upto)} with histogram {hist}")
    full = circuits(M)
    full_hist = dict(Counter(c.size for c in full))
    if full_hist != {12: 7, 14: 6, 15: 12, 16: 6}:
        problems.append(f"full census histogram {full_hist}")
    bounds = dim_bounds(M)
    if not (bounds.dim_dual_from_ground == bounds.dim_dual_from_counts == 5):
        problems.append(
            f"dual dimension {bounds.dim_dual_from_ground}/{bounds.dim_dual_from_counts}, wanted 5/5"
        )
    detail = (
        "25 circuits of sizes {12: 7, 14: 6, 15: 12} up to the rank; the complete "
        "census adds 6 circuits of size 16; dim of the dual complex is 5 by both formulas"
        if not problems
        else "; ".join(problems)
    )
    _report(4, not problems, detail, t0, budget=600)


def test_criterion_05_order_ten_worked_example():
    t0 = time.perf_counter()
    problems = []
    action = CyclicAction(10, (0, 2, 4))
    ideal = invariant_ideal(action)
    if ideal.mu != 14:
        problems.append(f"mu = {ideal.mu}, wanted 14")
    h9, h10 = hilbert_function(ideal, 9), hilbert_function(ideal, 10)
    if (h9, h10) != (55, 52):
        problems.append(f"Hilbert values ({h9}, {h10}), wanted (55, 52)")
    kernel = dual_kernel_forms(ideal)
    if len(kernel) != 2:
        problems.append(f"dual kernel dimension {len(kernel)}, wanted 2")
    witness = surjectivity_witness_distinct(action)
    if not witness.verified or len(witness.support) != 52:
        problems.append(
            f"difference-of-powers witness verified={witness.verified}, "
            f"support {len(witness.support)}, wanted 52"
        )
    detail = (
        "mu=14, H(9)=55, H(10)=52, dual kernel dimension 2, difference-of-powers "
        "witness in the kernel with support 52"
        if not problems
        else "; ".join(problems)
    )
    _report(5, not problems, detail, t0, budget=30)


def test_criterion_06_order_fifteen_scan():
    t0 = time.perf_counter()
    problems = []
    report = scan_3vars(15)
    expected = ((10, 24), (11, 72), (12, 24), (13, 48), (17, 24), (28, 12), (34, 12), (46, 2), (51, 6), (136, 1))
    if report.histogram != expected:
        problems.append(f"histogram {report.histogram}")
    small = [c for c in report.cells if c.mu < 17]
    if not small or any(c.gcd_with_order != 1 for c in small):
        problems.append("a generator count below 17 occurred with non-coprime weights")
    if any(c.mu < 17 for c in report.cells if c.gcd_with_order > 1):
        problems.append("non-coprime weights produced fewer than 17 generators")
    detail = (
        f"histogram over {len(report.cells)} cells matches; every count below 17 "
        "has gcd(a, b, 15) = 1"
        if not problems
        else "; ".join(problems)
    )
    _report(6, not problems, detail, t0, budget=5)


def test_criterion_07_counting_formula_and_generator_bounds():
    t0 = time.perf_counter()
    problems = []
    checks = 0
    for d in range(2, 21):
        exps = np.array([m.exponents for m in enumerate_basis(3, d)], dtype=np.int64)
        triples = np.array(list(itertools.product(range(d), repeat=3)), dtype=np.int64)
        brute = ((exps @ triples.T) % d == 0).sum(axis=0)
        for idx, a in enumerate(itertools.product(range(d), repeat=3)):
            checks += 1
            if count_fixed_formula(CyclicAction(d, a)) != int(brute[idx]):
                problems.append(f"formula mismatch at order {d}, weights {a}")
                break
    for d in range(3, 31):
        bound = mu_upper_bound_3vars(d)
        if not bound.all_within_bound:
            problems.append(f"3-variable bound violated at d={d}")
        composite = smallest_prime_factor(d) < d
        if composite and not bound.sharp:
            problems.append(f"no sharpness witness at composite d={d}")
        if bound.sharp and bound.witness is None:
            problems.append(f"sharp without a witness at d={d}")
    for d in range(2, 9):
        if not mu_upper_bound_check_4vars(d):
            problems.append(f"4-variable bound (difference-primitive reading) fails at d={d}")
    literal_failures = {
        d for d in range(2, 9) if not mu_upper_bound_check_4vars(d, primitive_differences=False)
    }
    if literal_failures != {4, 6, 8}:
        problems.append(f"literal 4-variable reading fails at {sorted(literal_failures)}")
    detail = (
        f"counting formula matches enumeration on {checks} weight triples; 3-variable "
        "bound holds to d=30 and is attained exactly at composite d; 4-variable bound "
        "holds to d=8 once pairwise weight differences are required coprime to d "
        "(the unrepaired reading fails at d = 4, 6, 8)"
        if not problems
        else "; ".join(problems)
    )
    _report(7, not problems, detail, t0, budget=120)


def test_criterion_08_prediction_cross_validation():
    t0 = time.perf_counter()
    problems = []
    classes = 0
    for n, dmax in ((3, 8), (4, 4)):
        for d in range(2, dmax + 1):
            report = cross_validate_dichotomy(n, d)
            classes += report.class_count
            if report.mismatches:
                problems.append(f"(n={n}, d={d}) mismatches: {report.mismatches}")
    detail = (
        f"prediction equals the direct scan on all {classes} canonicalized weight "
        "classes for n=3, d<=8 and n=4, d<=4"
        if not problems
        else "; ".join(problems)
    )
    _report(8, not problems, detail, t0, budget=600)


def test_criterion_09_dihedral_generator_counts_and_failures():
    t0 = time.perf_counter()
    problems = []
    for d in range(2, 11):
        want = d + 3 if d % 2 else 2 * d + 5
        got = dihedral_ideal(d).mu
        if got != want:
            problems.append(f"mu({d}) = {got}, wanted {want}")
    expected_failures = {
        3: ("injectivity", 5),
        4: ("surjectivity", 7),
        5: ("injectivity", 9),
        6: ("surjectivity", 11),
    }
    for d, (mode, degree) in expected_failures.items():
        report = dihedral_wlp_check(d)
        if not report.fails or report.failure_mode != mode or report.failure_degree != degree:
            problems.append(
                f"d={d}: fails={report.fails}, mode={report.failure_mode}, "
                f"degree={report.failure_degree}; wanted {mode} at {degree}"
            )
        if d % 2 and not report.cofactor_verified:
            problems.append(f"d={d}: cofactor identity not verified")
    if dihedral_wlp_check(2).fails is not False:
        problems.append("d=2 unexpectedly failed")
    for d in (6, 8):
        record = s2_multiplicity_check(d)
        if not record.surjectivity_obstructed:
            problems.append(f"sign-count inequality not obstructing at d={d}")
        if record.target_alternating != (2 * d * d + d - 4) // 2 or record.source_alternating != d * d:
            problems.append(f"sign counts off at d={d}")
    detail = (
        "generator counts d+3 / 2d+5 for d=2..10; failures at degree 2d-1 with the "
        "expected modes for d=3..6 (d=2 holds and is reported as an edge case); odd-d "
        "cofactor identities verified; sign-count inequality obstructs at d=6, 8 "
        "(at d=4 the counts tie and the failure is caught by rank instead)"
        if not problems
        else "; ".join(problems)
    )
    _report(9, not problems, detail, t0, budget=120)


def test_criterion_10_banded_binomial_minors():
    t0 = time.perf_counter()
    problems = []
    minors = 0
    for m in range(0, 13):
        for k in range(0, m + 1):
            report = all_maximal_minors_nonzero(toeplitz(k, m))
            minors += report.minors_checked
            if not report.all_nonzero:
                problems.append(f"zero maximal minor in T_({k},{m}) at {report.zero_witness}")
    detail = (
        f"all {minors} maximal minors over 0 <= k <= m <= 12 are nonzero"
        if not problems
        else "; ".join(problems)
    )
    _report(10, not problems, detail, t0, budget=60)


def _random_form(rng, n, d, bound=3):
    terms = {}
    for m in enumerate_basis(n, d):
        c = rng.randint(-bound, bound)
        if c:
            terms[m] = Fraction(c)
    return PolyForm.from_terms(n, d, terms)


def _kernel_form_corpus():
    """Forms produced by the library's own machinery, for the support bounds."""
    corpus = []
    for c in circuits(SurMatroid.build(3, 3)):
        corpus.append(c.form(3, 3))
    for c in circuits(SurMatroid.build(4, 2)):
        corpus.append(c.form(4, 2))
    for c in circuits(SurMatroid.build(3, 5)):
        corpus.append(c.form(3, 5))
    corpus.extend(_census(3, 5, 3).minimal_failing)
    corpus.extend(_census(4, 3, 6).minimal_failing)
    corpus.extend(dual_kernel_forms(invariant_ideal(CyclicAction(10, (0, 2, 4)))))
    corpus.append(surjectivity_witness_distinct(CyclicAction(10, (0, 2, 4))).form)
    corpus.append(surjectivity_witness_two_block(CyclicAction(6, (1, 1, 4, 4))).form)
    return corpus


def test_criterion_11_property_suites():
    t0 = time.perf_counter()
    problems = []

    # closed-form iterated differentiation identity on 200 random forms
    rng = random.Random(11)
    produced = 0
    while produced < 200:
        n = rng.randint(2, 4)
        d = rng.randint(1, 6)
        f = _random_form(rng, n, d)
        if f.is_zero():
            continue
        produced += 1
        for c in range(1, d + 1):
            diff_by_ell_power(f, c)  # asserts slice formula == iteration internally

    # translation invariance iff annihilation, on a fresh corpus
    for _ in range(100):
        n = rng.randint(2, 4)
        d = rng.randint(1, 5)
        f = _random_form(rng, n, d)
        if f.is_zero():
            continue
        annihilated = diff_by_ell(f).is_zero()
        if depends_only_on_differences(f) != annihilated:
            problems.append(f"translation test disagrees with annihilation on {f}")
        if (translate_by_ones(f) == dict(f.terms)) != annihilated:
            problems.append(f"translation expansion disagrees on {f}")

    # support bounds on every kernel form the library produces
    corpus = _kernel_form_corpus()
    for f in corpus:
        census = support_census(f)
        report = min_annihilator_exponent(f)
        if report.min_support_bound is not None and census.size < report.min_support_bound:
            problems.append(f"support bound violated: {f}")
        if not census.ell_annihilated:
            problems.append(f"corpus form not annihilated: {f}")
            continue
        if not census.min_support_ok:
            problems.append(f"minimal support bound flag failed: {f}")
        if not census.slice_sums_ok:
            problems.append(f"slice coefficient sums nonzero: {f}")
        if not census.slices_nonempty_ok:
            problems.append(f"an expected slice misses the support: {f}")
        if census.n == 3 and not census.slice_lower_bounds_ok:
            problems.append(f"per-slice lower bound failed: {f}")
        if census.n >= 4 and not census.product_bound_ok:
            problems.append(f"product support bound failed: {f}")
    for d in range(2, 7):
        f = dihedral_form(d)
        report = min_annihilator_exponent(f)
        if report.min_support_bound is not None and len(f.support()) < report.min_support_bound:
            problems.append(f"support bound violated on the degree-{2 * d} mirror form")

    # matroid axioms on the two small grounds
    for n, d in ((3, 3), (4, 2)):
        M = SurMatroid.build(n, d)
        circs = [frozenset(c.indices) for c in circuits(M)]
        for a, b in itertools.combinations(circs, 2):
            if a <= b or b <= a:
                problems.append(f"nested circuits in ({n},{d})")
            for e in a & b:
                if not any(c <= (a | b) - {e} for c in circs):
                    problems.append(f"weak elimination fails in ({n},{d})")
        for k in (1, 2, 3):
            for subset in itertools.combinations(range(len(M.ground)), k):
                if is_independent(M, subset) != (matroid_rank(M, subset) == len(subset)):
                    problems.append(f"independence/rank disagreement in ({n},{d})")

    # duality rank identities on seeded random ideals
    for _ in range(30):
        n, d = rng.choice([(3, 3), (3, 4), (4, 3)])
        pool = [m for m in enumerate_basis(n, d) if not m.is_pure_power()]
        extra = [m for m in pool if rng.random() < 0.4]
        ideal = MonomialIdeal.from_extra(n, d, extra)
        h_top = hilbert_function(ideal, d)
        rank = rank_int_rows(mult_map_rows(ideal, d - 1)) if h_top else 0
        kernel = dual_kernel_forms(ideal)
        if rank + len(kernel) != h_top:
            problems.append(f"rank identity fails for {ideal.to_json()}")
        if any(not diff_by_ell(f).is_zero() for f in kernel):
            problems.append(f"dual kernel form not annihilated for {ideal.to_json()}")

    # complete-intersection quotients keep maximal ranks everywhere
    for n in (2, 3, 4):
        for d in (2, 4, 6):
            if not wlp_check(MonomialIdeal.from_extra(n, d, [])).verdict:
                problems.append(f"pure-power quotient ({n},{d}) lost a maximal rank")

    detail = (
        f"derivative identity on 200 random forms, translation test on 100, support "
        f"bounds on {len(corpus)} kernel forms, matroid axioms on two grounds, rank "
        "identities on 30 random ideals, pure-power quotients all maximal"
        if not problems
        else "; ".join(problems[:4])
    )
    _report(11, not problems, detail, t0, budget=120)


def test_criterion_12_edge_cases_reported_not_raised():
    t0 = time.perf_counter()
    problems = []
    free = girth_report(SurMatroid.build(3, 2), certify=True)
    if not free.is_infinite or free.girth is not None or free.witness is not None:
        problems.append("the (3,2) matroid did not report an infinite girth")
    if not free.certified:
        problems.append("the (3,2) full-ground independence was not certified")
    edge = dihedral_wlp_check(2)
    if edge.edge_case is None or edge.fails is not False:
        problems.append("the d=2 mirror case did not surface an edge-case entry")
    if not edge.wlp.verdict:
        problems.append("the d=2 mirror quotient lost a maximal rank")
    detail = (
        "the (3,2) matroid reports infinite girth (free matroid) and the d=2 mirror "
        "action reports an explicit edge-case entry; neither raises"
        if not problems
        else "; ".join(problems)
    )
    _report(12, not problems, detail, t0, budget=60)

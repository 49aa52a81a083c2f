"""Exact tools for the weak Lefschetz property of equigenerated artinian monomial ideals.

The package decides maximal rank of multiplication by x1 + ... + xn in
integer arithmetic, enumerates the circuits of the surjectivity matroid,
and reproduces the cyclic, dihedral, and census computations that anchor
the test suite.
"""

from .classify import (
    CATALOGS,
    ClassificationResult,
    classify,
    minimal_failure_check,
    verify_listed_forms,
)
from .cyclic import (
    CyclicAction,
    canonical_action_classes,
    count_fixed,
    count_fixed_formula,
    cross_validate_dichotomy,
    fixed_monomials,
    injectivity_witness,
    invariant_ideal,
    mu_upper_bound_3vars,
    mu_upper_bound_check_4vars,
    scan_3vars,
    surjectivity_witness_distinct,
    surjectivity_witness_two_block,
    wlp_prediction,
)
from .cyclotomic import CycloInt, cyclotomic_poly, root_power
from .dihedral import (
    dihedral_form,
    dihedral_ideal,
    dihedral_wlp_check,
    even_square_structure,
    injectivity_cofactor,
    mu_dihedral_check,
    s2_multiplicity_check,
)
from .forms import (
    LinearForm,
    PolyForm,
    diff_by_ell,
    diff_by_ell_power,
    expand_product,
    min_annihilator_exponent,
    normalize_integer_form,
    support_census,
    translate_by_ones,
)
from .ideals import (
    MonomialIdeal,
    WlpReport,
    cobasis,
    dual_kernel_forms,
    hilbert_function,
    wlp_check,
)
from .linalg import RationalMatrix, all_maximal_minors_nonzero, toeplitz
from .matroid import (
    Circuit,
    SurMatroid,
    alexander_dual_check,
    circuits,
    circuits_up_to,
    dim_bounds,
    girth,
    girth_report,
    is_independent,
    matroid_rank,
)
from .monomials import Monomial, enumerate_basis, monomial_str, parse_monomial

__version__ = "0.1.0"

__all__ = [
    "CATALOGS",
    "Circuit",
    "ClassificationResult",
    "CyclicAction",
    "CycloInt",
    "LinearForm",
    "Monomial",
    "MonomialIdeal",
    "PolyForm",
    "RationalMatrix",
    "SurMatroid",
    "WlpReport",
    "alexander_dual_check",
    "all_maximal_minors_nonzero",
    "canonical_action_classes",
    "circuits",
    "circuits_up_to",
    "classify",
    "cobasis",
    "count_fixed",
    "count_fixed_formula",
    "cross_validate_dichotomy",
    "cyclotomic_poly",
    "diff_by_ell",
    "diff_by_ell_power",
    "dihedral_form",
    "dihedral_ideal",
    "dihedral_wlp_check",
    "dim_bounds",
    "dual_kernel_forms",
    "enumerate_basis",
    "even_square_structure",
    "expand_product",
    "fixed_monomials",
    "girth",
    "girth_report",
    "hilbert_function",
    "injectivity_cofactor",
    "injectivity_witness",
    "invariant_ideal",
    "is_independent",
    "matroid_rank",
    "min_annihilator_exponent",
    "minimal_failure_check",
    "monomial_str",
    "mu_dihedral_check",
    "mu_upper_bound_3vars",
    "mu_upper_bound_check_4vars",
    "normalize_integer_form",
    "parse_monomial",
    "root_power",
    "s2_multiplicity_check",
    "scan_3vars",
    "support_census",
    "surjectivity_witness_distinct",
    "surjectivity_witness_two_block",
    "toeplitz",
    "translate_by_ones",
    "verify_listed_forms",
    "wlp_check",
    "wlp_prediction",
]

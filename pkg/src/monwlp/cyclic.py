"""Diagonal cyclic group actions and the WLP of their invariant ideals.

An action of order d on n variables is a residue vector (a1, ..., an):
the group generator scales x_i by the a_i-th power of a fixed primitive
d-th root of unity.  A monomial is fixed iff its exponent vector pairs to
zero with a modulo d.  The invariant ideal is generated by the fixed
monomials of degree d, so it is equigenerated and artinian, and its WLP
is decided by how many of the a_i coincide: the property holds iff at
least n-1 of them are equal.  Both directions are made computational
here: explicit kernel witnesses when it fails, and a cross-validation
scan comparing the prediction against the rank-by-rank check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .cyclotomic import CycloInt, root_power
from .forms import LinearForm, PolyForm, _diff_ell_raw, expand_product
from .ideals import MonomialIdeal, hilbert_function, wlp_check
from .monomials import Monomial, enumerate_basis


@dataclass(frozen=True)
class CyclicAction:
    """x_i -> (primitive order-th root)^(a_i) * x_i."""

    order: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("need order >= 1")
        if len(self.a) < 1:
            raise ValueError("need at least one variable")
        if any(not 0 <= ai < self.order for ai in self.a):
            raise ValueError(f"residues {self.a} outside 0..{self.order - 1}")

    @property
    def n(self) -> int:
        return len(self.a)


def is_fixed(action: CyclicAction, m: Monomial) -> bool:
    if m.n != action.n:
        raise ValueError("variable count mismatch")
    return sum(ai * e for ai, e in zip(action.a, m.exponents)) % action.order == 0


def fixed_monomials(action: CyclicAction, degree: int) -> tuple[Monomial, ...]:
    return tuple(m for m in enumerate_basis(action.n, degree) if is_fixed(action, m))


def count_fixed(action: CyclicAction, degree: int | None = None) -> int:
    """Brute-force count of fixed monomials (degree defaults to the order)."""
    degree = action.order if degree is None else degree
    return len(fixed_monomials(action, degree))


def count_fixed_formula(action: CyclicAction) -> int:
    """Closed-form count of fixed degree-d monomials for three variables, d the order."""
    if action.n != 3:
        raise ValueError("the closed form covers exactly three variables")
    d = action.order
    a1, a2, a3 = action.a
    g_all = gcd(gcd((a2 - a1) % d, (a3 - a1) % d), d)
    total = (
        g_all * d
        + gcd((a2 - a1) % d, d)
        + gcd((a3 - a1) % d, d)
        + gcd((a3 - a2) % d, d)
    )
    assert total % 2 == 0
    return 1 + total // 2


def invariant_ideal(action: CyclicAction) -> MonomialIdeal:
    """The ideal generated by the fixed monomials of degree equal to the order."""
    gens = fixed_monomials(action, action.order)
    return MonomialIdeal.from_generators(action.n, action.order, gens)


@dataclass(frozen=True)
class ScanCell:
    a: int
    b: int
    mu: int
    gcd_with_order: int
    degenerate: bool  # a or b zero, or a == b


@dataclass(frozen=True)
class ScanReport:
    d: int
    cells: tuple[ScanCell, ...]
    histogram: tuple[tuple[int, int], ...]  # (mu value, number of cells), ascending


def scan_3vars(d: int) -> ScanReport:
    """mu of the invariant ideal of (0, a, b) for all residue pairs, with the distribution."""
    cells = []
    for a in range(d):
        for b in range(d):
            mu = count_fixed_formula(CyclicAction(order=d, a=(0, a, b)))
            cells.append(
                ScanCell(
                    a=a,
                    b=b,
                    mu=mu,
                    gcd_with_order=gcd(gcd(a, b), d),
                    degenerate=(a == 0 or b == 0 or a == b),
                )
            )
    hist: dict[int, int] = {}
    for cell in cells:
        hist[cell.mu] = hist.get(cell.mu, 0) + 1
    return ScanReport(d=d, cells=tuple(cells), histogram=tuple(sorted(hist.items())))


def smallest_prime_factor(d: int) -> int:
    if d < 2:
        raise ValueError("need d >= 2")
    p = 2
    while p * p <= d:
        if d % p == 0:
            return p
        p += 1
    return d


@dataclass(frozen=True)
class MuBoundReport:
    d: int
    p: int
    bound: Fraction
    max_mu: int | None  # over distinct residues with gcd(a1,a2,a3,d)=1; None when class empty
    witness: tuple[int, int, int] | None
    all_within_bound: bool
    sharp: bool  # the bound is attained


def mu_upper_bound_3vars(d: int, verify: bool = True) -> MuBoundReport:
    """Upper bound for mu over faithful three-variable actions with distinct residues.

    p is the smallest prime factor of d.  With verify=True the bound is checked
    exhaustively over the class; the bound is attained exactly when d is
    composite (for prime d every eligible action has mu = (d+5)/2, strictly
    below the bound).
    """
    if d < 3:
        raise ValueError("need d >= 3")
    p = smallest_prime_factor(d)
    if d % (p * p) == 0:
        bound = Fraction((p + 1) * d + 4 * p, 2 * p)
    else:
        bound = Fraction((p + 1) * d + p * p + 3 * p, 2 * p)
    max_mu = None
    witness = None
    ok = True
    if verify:
        for a2 in range(1, d):
            for a3 in range(1, d):
                if a2 == a3:
                    continue
                if gcd(gcd(a2, a3), d) != 1:
                    continue
                mu = count_fixed_formula(CyclicAction(order=d, a=(0, a2, a3)))
                if mu > bound:
                    ok = False
                if max_mu is None or mu > max_mu:
                    max_mu = mu
                    witness = (0, a2, a3)
    return MuBoundReport(
        d=d,
        p=p,
        bound=bound,
        max_mu=max_mu,
        witness=witness,
        all_within_bound=ok,
        sharp=max_mu is not None and Fraction(max_mu) == bound,
    )


def mu_upper_bound_check_4vars(d: int, primitive_differences: bool = True) -> bool:
    """Check mu <= 1 + (d+2)(d+1)/2 over four-variable actions with at most two equal residues.

    The bound needs the pairwise residue differences to be coprime to the
    order, not just the residues themselves: the fixed-monomial congruence
    only involves differences, and a common factor g > 1 rescales the
    solution count by g.  With primitive_differences the scan enforces
    that and the bound holds; without it the scan uses the weaker
    hypothesis gcd(a1,..,a4,d) = 1 alone, under which tuples such as
    (1,1,3,3) at d = 4 exceed the bound (19 fixed monomials against 16).
    """
    if d < 2:
        raise ValueError("need d >= 2")
    bound = 1 + (d + 2) * (d + 1) // 2
    exps = [m.exponents for m in enumerate_basis(4, d)]
    for a in itertools.product(range(d), repeat=4):
        if max(a.count(v) for v in a) > 2:
            continue
        if gcd(gcd(gcd(a[0], a[1]), gcd(a[2], a[3])), d) != 1:
            continue
        if primitive_differences:
            g = d
            for i in range(4):
                for j in range(i + 1, 4):
                    g = gcd(g, a[i] - a[j])
            if g != 1:
                continue
        fixed = sum(
            1 for e in exps if (a[0] * e[0] + a[1] * e[1] + a[2] * e[2] + a[3] * e[3]) % d == 0
        )
        if fixed > bound:
            return False
    return True


def wlp_prediction(action: CyclicAction) -> bool:
    """Predicted WLP of the invariant ideal: at least n-1 of the residues coincide."""
    if action.n < 3:
        raise ValueError("the dichotomy is about three or more variables")
    best = max(action.a.count(v) for v in set(action.a))
    return best >= action.n - 1


@dataclass(frozen=True)
class InjectivityWitness:
    action: CyclicAction
    form: PolyForm  # degree order-1, coefficients in Z[w]
    product_lands_in_ideal: bool  # every monomial of ell*form is fixed
    nonzero: bool
    dim_source: int  # Hilbert value in degree order-1
    dim_target: int  # Hilbert value in degree order

    @property
    def verified(self) -> bool:
        return self.nonzero and self.product_lands_in_ideal


def injectivity_witness(action: CyclicAction) -> InjectivityWitness:
    """A nonzero form of degree d-1 whose product with ell lies in the invariant ideal.

    Built as the product over the nontrivial group elements of the twisted
    linear forms; requires not all residues equal (otherwise the product is a
    scalar multiple of ell^(d-1) and witnesses nothing).
    """
    d = action.order
    if len(set(action.a)) == 1:
        raise ValueError("residues all equal: the product witness degenerates")
    factors = [
        LinearForm(action.n, tuple(root_power(d, i * ai) for ai in action.a))
        for i in range(1, d)
    ]
    f = expand_product(factors, n=action.n)
    ell = LinearForm(action.n, tuple(CycloInt.one(d) for _ in range(action.n))).to_form()
    product = ell * f
    lands = all(is_fixed(action, m) for m, _ in product.terms)
    ideal = invariant_ideal(action)
    return InjectivityWitness(
        action=action,
        form=f,
        product_lands_in_ideal=lands,
        nonzero=not f.is_zero(),
        dim_source=hilbert_function(ideal, d - 1),
        dim_target=hilbert_function(ideal, d),
    )


@dataclass(frozen=True)
class DistinctWitness:
    """Kernel form for three distinct residues: a d-th power minus its conjugate."""

    action: CyclicAction
    l: int
    k: int
    form: PolyForm  # coefficients in Z[w]
    support: tuple[Monomial, ...]
    support_from_congruence: tuple[Monomial, ...]
    paths_agree: bool
    support_is_nonfixed_set: bool
    coefficient_sum_zero: bool  # the base linear form is annihilated by ell
    annihilated: bool

    @property
    def verified(self) -> bool:
        return (
            self.paths_agree
            and self.support_is_nonfixed_set
            and self.coefficient_sum_zero
            and self.annihilated
        )


def surjectivity_witness_distinct(action: CyclicAction) -> DistinctWitness:
    """Dual-kernel witness for n = 3 and pairwise distinct residues.

    The support is computed two independent ways: expanding L^d - conj(L)^d
    over Z[w], and the congruence description of the non-fixed monomials of an
    equivalent action; both must agree and must equal the complement of the
    fixed monomials.
    """
    if action.n != 3:
        raise ValueError("this witness shape is specific to three variables")
    if len(set(action.a)) != 3:
        raise ValueError("need pairwise distinct residues")
    d = action.order
    a1, a2, a3 = action.a
    l = (a2 - a3 - 1) % d
    k = (a3 - a1 - 1) % d

    def window(lo: int, hi: int) -> CycloInt:
        total = CycloInt.zero(d)
        for j in range(lo, hi + 1):
            total = total + root_power(d, j)
        return total

    c1 = window(0, l)
    c2 = window(l + 1, l + k + 1)
    c3 = window(l + k + 2, 2 * d - 1)
    L = LinearForm(3, (c1, c2, c3)).to_form()
    Lbar = LinearForm(3, (c1.conjugate(), c2.conjugate(), c3.conjugate())).to_form()
    power = L
    power_bar = Lbar
    for _ in range(d - 1):
        power = power * L
        power_bar = power_bar * Lbar
    F = power - power_bar

    support = tuple(m for m, _ in F.terms)
    weights = (l, (2 * l + k + 2) % d, (l + k + 1) % d)
    congruence = tuple(
        m
        for m in enumerate_basis(3, d)
        if sum(w * e for w, e in zip(weights, m.exponents)) % d != 0
    )
    nonfixed = tuple(m for m in enumerate_basis(3, d) if not is_fixed(action, m))
    annihilated = _diff_ell_raw(F).is_zero() and not F.is_zero()
    return DistinctWitness(
        action=action,
        l=l,
        k=k,
        form=F,
        support=support,
        support_from_congruence=congruence,
        paths_agree=set(support) == set(congruence),
        support_is_nonfixed_set=set(support) == set(nonfixed),
        coefficient_sum_zero=(c1 + c2 + c3).is_zero(),
        annihilated=annihilated,
    )


@dataclass(frozen=True)
class TwoBlockWitness:
    action: CyclicAction
    form: PolyForm  # integer coefficients
    support_size: int
    support_avoids_fixed: bool
    annihilated: bool

    @property
    def verified(self) -> bool:
        return self.support_avoids_fixed and self.annihilated and self.support_size == 2 * self.action.order


def surjectivity_witness_two_block(action: CyclicAction) -> TwoBlockWitness:
    """Dual-kernel witness when the residues take exactly two values, each at least twice."""
    values = sorted(set(action.a))
    if len(values) != 2:
        raise ValueError("need exactly two distinct residues")
    counts = {v: action.a.count(v) for v in values}
    if min(counts.values()) < 2:
        raise ValueError("each residue value must occur at least twice")
    lo_idx = [i for i, v in enumerate(action.a, start=1) if v == values[0]]
    hi_idx = [i for i, v in enumerate(action.a, start=1) if v == values[1]]
    i, j = lo_idx[0], lo_idx[1]
    k, m = hi_idx[-2], hi_idx[-1]

    def e(var: int, other: int, sign: int) -> tuple:
        coeffs = [0] * action.n
        coeffs[var - 1] = 1
        coeffs[other - 1] = sign
        return tuple(coeffs)

    d = action.order
    first = LinearForm(action.n, e(i, j, -1))
    second = LinearForm(action.n, e(m, k, -1))
    factors = [first] + [second] * (d - 1)
    H = expand_product(factors, n=action.n)
    support = [mm for mm, _ in H.terms]
    return TwoBlockWitness(
        action=action,
        form=H,
        support_size=len(support),
        support_avoids_fixed=not any(is_fixed(action, mm) for mm in support),
        annihilated=_diff_ell_raw(H).is_zero(),
    )


def _units(d: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, d) if gcd(u, d) == 1)


@lru_cache(maxsize=None)
def canonical_action_classes(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Residue tuples up to shift, unit scaling, and permutation (sorted representatives)."""
    units = _units(d)
    seen = set()
    reps = []
    for a in itertools.product(range(d), repeat=n):
        key = min(
            tuple(sorted((u * ai + c) % d for ai in a))
            for u in units
            for c in range(d)
        )
        if key not in seen:
            seen.add(key)
            reps.append(key)
    return tuple(sorted(reps))


@dataclass(frozen=True)
class DichotomyRecord:
    a: tuple[int, ...]
    predicted: bool
    verdict: bool
    mu: int

    @property
    def agrees(self) -> bool:
        return self.predicted == self.verdict


@dataclass(frozen=True)
class DichotomyReport:
    n: int
    d: int
    records: tuple[DichotomyRecord, ...]
    mismatches: tuple[DichotomyRecord, ...]

    @property
    def class_count(self) -> int:
        return len(self.records)


def cross_validate_dichotomy(n: int, d: int) -> DichotomyReport:
    """Compare the equal-residue prediction against the full rank scan, class by class.

    Equivalent actions (shift, unit scaling, variable permutation) fix the same
    monomials in degree d, so one representative per class suffices.
    """
    records = []
    for a in canonical_action_classes(n, d):
        action = CyclicAction(order=d, a=a)
        ideal = invariant_ideal(action)
        verdict = wlp_check(ideal).verdict
        records.append(
            DichotomyRecord(
                a=a,
                predicted=wlp_prediction(action),
                verdict=verdict,
                mu=ideal.mu,
            )
        )
    mismatches = tuple(r for r in records if not r.agrees)
    return DichotomyReport(n=n, d=d, records=tuple(records), mismatches=mismatches)

"""Census of equigenerated artinian monomial ideals failing surjectivity.

An ideal in the census is the n pure d-th powers plus a fixed number of
further degree-d monomials.  Its inverse system in degree d is spanned by
the leftover monomials, and the ideal fails surjectivity in degree d-1
exactly when that span meets the kernel of differentiation by ell.  All
kernels here are cut out of one matrix: the kernel K of the full
derivative matrix on non-pure-power monomials.  The dual kernel of the
ideal with extra generators Z is {v in K : v vanishes on Z}, so each
ideal costs one small rank computation instead of a fresh elimination.

The census headline number counts distinct dual kernels as subspaces
(canonical echelon key).  One-dimensional kernels are carried as
normalized forms, and those forms feed the permutation-orbit and
minimality analyses; kernels of dimension two and larger are counted
separately.  The two pinned presets come out as

    c1: n=3, d=5, 3 extra  (816 ideals, 25 kernels, all lines, 7 classes)
    c2: n=4, d=3, 6 extra  (8008 ideals, 237 kernels = 159 lines + 78
        planes, 13 classes from the lines)

The catalogs list one representative form per permutation class; the
verifier re-expands every one, re-checks annihilation by direct
differentiation, checks minimality of the support, and matches it
against the census output.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .forms import LinearForm, PolyForm, diff_by_ell, expand_product, form_key, normalize_integer_form
from .linalg import _rref, normalize_int_vector, nullspace_int_rows, rank_int_rows
from .matroid import SurMatroid, kernel_basis
from .monomials import Monomial

_SUBSET_CAP = 1_000_000


@dataclass(frozen=True)
class ClassificationResult:
    n: int
    d: int
    extra: int
    ideal_count: int
    failing_count: int
    higher_kernel_count: int  # failing ideals whose dual kernel has dimension >= 2
    higher_space_count: int  # distinct dual kernels of dimension >= 2
    distinct_forms: tuple[PolyForm, ...]  # normalized generators of the line kernels
    orbit_classes: tuple[tuple[PolyForm, int], ...]  # (representative, orbit size)
    minimal_failing: tuple[PolyForm, ...]  # distinct forms whose supports are circuits

    @property
    def form_count(self) -> int:
        return len(self.distinct_forms)

    @property
    def kernel_space_count(self) -> int:
        """Distinct dual kernels as subspaces, every dimension included."""
        return len(self.distinct_forms) + self.higher_space_count

    @property
    def class_count(self) -> int:
        return len(self.orbit_classes)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "extra": self.extra,
            "ideal_count": self.ideal_count,
            "failing_count": self.failing_count,
            "higher_kernel_count": self.higher_kernel_count,
            "higher_space_count": self.higher_space_count,
            "kernel_space_count": self.kernel_space_count,
            "form_count": self.form_count,
            "class_count": self.class_count,
            "orbit_classes": [
                {"representative": f.to_json(), "orbit_size": size}
                for f, size in self.orbit_classes
            ],
            "minimal_failing_count": len(self.minimal_failing),
        }


def _kernel_rows(M: SurMatroid) -> list[list[int]]:
    return [list(v) for v in kernel_basis(M)]


def _space_key(vectors: list[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Canonical key of the span: echelon rows scaled to coprime integers."""
    reduced, _ = _rref([[Fraction(x) for x in v] for v in vectors])
    return tuple(normalize_int_vector(row) for row in reduced if any(row))


def _restricted_kernel(rows: list[list[int]], subset: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Basis of the kernel vectors vanishing on the subset positions."""
    c = len(rows)
    if c == 0:
        return []
    if not subset:
        sols = [tuple(1 if j == i else 0 for j in range(c)) for i in range(c)]
    else:
        constraint = [[rows[i][z] for i in range(c)] for z in subset]
        sols = nullspace_int_rows(constraint)
    out = []
    for x in sols:
        v = [0] * len(rows[0])
        for i, xi in enumerate(x):
            if xi:
                for g in range(len(v)):
                    v[g] += xi * rows[i][g]
        out.append(tuple(v))
    return out


_WORK_ROWS: list[list[int]] | None = None
_WORK_SUBSETS: list[tuple[int, ...]] | None = None


def _worker_init(rows, subsets):
    global _WORK_ROWS, _WORK_SUBSETS
    _WORK_ROWS = rows
    _WORK_SUBSETS = subsets


def _worker_range(bounds: tuple[int, int]):
    lo, hi = bounds
    failing = 0
    higher = 0
    vectors = []
    spaces = set()
    for idx in range(lo, hi):
        subset = _WORK_SUBSETS[idx]
        kern = _restricted_kernel(_WORK_ROWS, subset)
        if not kern:
            continue
        failing += 1
        if len(kern) == 1:
            vectors.append(kern[0])
        else:
            higher += 1
            spaces.add(_space_key(kern))
    return failing, higher, vectors, spaces


def classify(n: int, d: int, extra: int, processes: int = 1) -> ClassificationResult:
    """Enumerate ideals with the given number of non-pure-power generators.

    Every subset of that size is one ideal; the scan is deterministic in
    lexicographic subset order and the result does not depend on the
    process count.
    """
    M = SurMatroid.build(n, d)
    ground_size = len(M.ground)
    total = comb(ground_size, extra)
    if total > _SUBSET_CAP:
        raise ValueError(f"census would need {total} ideals; cap is {_SUBSET_CAP}")
    rows = _kernel_rows(M)
    subsets = list(itertools.combinations(range(ground_size), extra))

    if processes > 1:
        chunk = (len(subsets) + processes - 1) // processes
        bounds = [
            (lo, min(lo + chunk, len(subsets)))
            for lo in range(0, len(subsets), chunk)
        ]
        with multiprocessing.Pool(
            processes, initializer=_worker_init, initargs=(rows, subsets)
        ) as pool:
            parts = pool.map(_worker_range, bounds)
    else:
        _worker_init(rows, subsets)
        parts = [_worker_range((0, len(subsets)))]

    failing = sum(p[0] for p in parts)
    higher = sum(p[1] for p in parts)
    higher_spaces: set[tuple] = set()
    seen: dict[tuple, PolyForm] = {}
    for _, _, vectors, spaces in parts:
        higher_spaces.update(spaces)
        for v in vectors:
            f = _vector_form(M, v)
            seen.setdefault(form_key(f), f)

    distinct = tuple(f for _, f in sorted(seen.items()))
    classes = _orbit_classes(distinct)
    minimal = tuple(f for f in distinct if _support_is_circuit(M, f))
    return ClassificationResult(
        n=n,
        d=d,
        extra=extra,
        ideal_count=total,
        failing_count=failing,
        higher_kernel_count=higher,
        higher_space_count=len(higher_spaces),
        distinct_forms=distinct,
        orbit_classes=classes,
        minimal_failing=minimal,
    )


def _vector_form(M: SurMatroid, v: tuple[int, ...]) -> PolyForm:
    terms = {M.ground[i]: c for i, c in enumerate(v) if c}
    return normalize_integer_form(PolyForm.from_terms(M.n, M.d, terms))


def _orbit_classes(forms: tuple[PolyForm, ...]) -> tuple[tuple[PolyForm, int], ...]:
    if not forms:
        return ()
    n = forms[0].n
    keyed = {form_key(f): f for f in forms}
    assigned: set[tuple] = set()
    classes = []
    for key in sorted(keyed):
        if key in assigned:
            continue
        f = keyed[key]
        orbit = {}
        for perm in itertools.permutations(range(1, n + 1)):
            g = normalize_integer_form(f.apply_permutation(perm))
            orbit[form_key(g)] = g
        for k in orbit:
            assert k in keyed, "permutation image escaped the census"
            assigned.add(k)
        rep_key = min(orbit)
        classes.append((orbit[rep_key], len(orbit)))
    classes.sort(key=lambda pair: form_key(pair[0]))
    return tuple(classes)


def _support_indices(M: SurMatroid, f: PolyForm) -> list[int]:
    lookup = {m: i for i, m in enumerate(M.ground)}
    out = []
    for m in f.support():
        if m not in lookup:
            raise ValueError(f"{m} is a pure power; the matroid does not carry it")
        out.append(lookup[m])
    return sorted(out)


def _support_is_circuit(M: SurMatroid, f: PolyForm) -> bool:
    idx = _support_indices(M, f)
    cols = M.column_rows(idx)
    r = rank_int_rows(cols)
    if r != len(idx) - 1:
        return False
    for drop in range(len(idx)):
        rest = [cols[i] for i in range(len(idx)) if i != drop]
        if rank_int_rows(rest) != len(idx) - 1:
            return False
    return True


def minimal_failure_check(f: PolyForm) -> bool:
    """Is the support of a kernel form minimal, i.e. a circuit?

    Requires a nonzero form annihilated by ell.  When the answer is yes the
    kernel on that support is also checked to be one-dimensional.
    """
    if f.is_zero():
        raise ValueError("need a nonzero form")
    if not diff_by_ell(f).is_zero():
        raise ValueError("the form is not annihilated by ell")
    M = SurMatroid.build(f.n, f.degree)
    ok = _support_is_circuit(M, f)
    if ok:
        idx = _support_indices(M, f)
        cols = M.column_rows(idx)
        assert len(idx) - rank_int_rows(cols) == 1, "circuit kernel must be a line"
    return ok


def _lin(n: int, coeffs: tuple[int, ...]) -> LinearForm:
    return LinearForm(n, coeffs)


def _poly(n: int, degree: int, terms: dict[tuple[int, ...], int]) -> PolyForm:
    return PolyForm.from_terms(n, degree, {Monomial(e): c for e, c in terms.items()})


def _c1_entries() -> tuple[PolyForm, ...]:
    """Seven representatives for n=3, d=5 (variables y1, y2, y3)."""
    l12 = _lin(3, (1, -1, 0))
    l13 = _lin(3, (1, 0, -1))
    l23 = _lin(3, (0, 1, -1))
    return (
        expand_product([l23, l13, l13, l12, _lin(3, (2, -1, -1))]),
        expand_product([l23, l13, l12, l12, _lin(3, (2, 1, -3))]),
        expand_product(
            [
                l23.to_form(),
                l13.to_form(),
                l12.to_form(),
                _poly(3, 2, {(2, 0, 0): 1, (1, 1, 0): 1, (0, 2, 0): 1,
                             (1, 0, 1): -3, (0, 1, 1): -3, (0, 0, 2): 3}),
            ]
        ),
        expand_product(
            [
                l23.to_form(),
                l13.to_form(),
                l12.to_form(),
                _poly(3, 2, {(2, 0, 0): 1, (1, 1, 0): -1, (0, 2, 0): -1,
                             (1, 0, 1): -1, (0, 1, 1): 3, (0, 0, 2): -1}),
            ]
        ),
        expand_product([l23, l23, l13, l13, l12]),
        expand_product([l23, l13, l12, l12, l12]),
        expand_product(
            [
                l23.to_form(),
                l13.to_form(),
                l12.to_form(),
                _poly(3, 2, {(2, 0, 0): 1, (1, 1, 0): -1, (0, 2, 0): 1,
                             (1, 0, 1): -1, (0, 1, 1): -1, (0, 0, 2): 1}),
            ]
        ),
    )


def _c2_entries() -> tuple[PolyForm, ...]:
    """Thirteen representatives for n=4, d=3 (variables y1..y4)."""
    l12 = _lin(4, (1, -1, 0, 0))
    l13 = _lin(4, (1, 0, -1, 0))
    l14 = _lin(4, (1, 0, 0, -1))
    l23 = _lin(4, (0, 1, -1, 0))
    l24 = _lin(4, (0, 1, 0, -1))
    l34 = _lin(4, (0, 0, 1, -1))
    return (
        expand_product([l24, l24, l13]),
        expand_product([l24, l14, l12]),
        expand_product([l23, l14, _lin(4, (1, 0, -2, 1))]),
        expand_product([l23, l14, _lin(4, (1, -1, -1, 1))]),
        expand_product([l34, l24, l13]),
        expand_product(
            [
                l14.to_form(),
                _poly(4, 2, {(1, 1, 0, 0): 1, (1, 0, 1, 0): 1, (0, 1, 1, 0): -2,
                             (1, 0, 0, 1): -2, (0, 1, 0, 1): 1, (0, 0, 1, 1): 1}),
            ]
        ),
        expand_product(
            [
                l12.to_form(),
                _poly(4, 2, {(1, 1, 0, 0): 1, (1, 0, 1, 0): -1, (0, 1, 1, 0): -1,
                             (0, 0, 1, 1): 2, (0, 0, 0, 2): -1}),
            ]
        ),
        expand_product(
            [
                l34.to_form(),
                _poly(4, 2, {(0, 2, 0, 0): 1, (1, 0, 1, 0): -1, (1, 0, 0, 1): 1,
                             (0, 1, 0, 1): -2, (0, 0, 1, 1): 1}),
            ]
        ),
        expand_product(
            [
                l34.to_form(),
                _poly(4, 2, {(2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (1, 0, 1, 0): -2,
                             (0, 1, 0, 1): -2, (0, 0, 1, 1): 2}),
            ]
        ),
        _poly(4, 3, {(2, 1, 0, 0): 2, (1, 2, 0, 0): -3, (0, 2, 1, 0): 2,
                     (1, 0, 2, 0): -1, (2, 0, 0, 1): -2, (1, 1, 0, 1): 2,
                     (0, 2, 0, 1): 1, (1, 0, 1, 1): 2, (0, 1, 1, 1): -4,
                     (0, 0, 2, 1): 1}),
        _poly(4, 3, {(2, 1, 0, 0): 1, (1, 2, 0, 0): -1, (0, 2, 1, 0): 1,
                     (1, 0, 2, 0): -1, (2, 0, 0, 1): -1, (1, 0, 1, 1): 2,
                     (0, 1, 1, 1): -2, (0, 0, 2, 1): 1, (0, 1, 0, 2): 1,
                     (0, 0, 1, 2): -1}),
        _poly(4, 3, {(2, 1, 0, 0): 1, (2, 0, 1, 0): -1, (1, 1, 1, 0): -2,
                     (0, 1, 2, 0): 2, (1, 0, 1, 1): 4, (0, 1, 1, 1): -2,
                     (0, 0, 2, 1): -2, (1, 0, 0, 2): -2, (0, 1, 0, 2): 1,
                     (0, 0, 1, 2): 1}),
        _poly(4, 3, {(2, 1, 0, 0): 1, (2, 0, 1, 0): -1, (1, 1, 1, 0): -1,
                     (0, 1, 2, 0): 1, (1, 1, 0, 1): -1, (1, 0, 1, 1): 3,
                     (0, 1, 1, 1): -1, (0, 0, 2, 1): -1, (1, 0, 0, 2): -1,
                     (0, 1, 0, 2): 1}),
    )


CATALOGS = {
    "c1": (3, 5, 3, _c1_entries),
    "c2": (4, 3, 6, _c2_entries),
}


@dataclass(frozen=True)
class CatalogEntryReport:
    index: int
    form: PolyForm  # normalized
    support_size: int
    annihilated: bool
    minimal: bool
    in_census_classes: bool

    @property
    def verified(self) -> bool:
        return self.annihilated and self.minimal and self.in_census_classes


@dataclass(frozen=True)
class CatalogReport:
    catalog: str
    n: int
    d: int
    extra: int
    entries: tuple[CatalogEntryReport, ...]
    census: ClassificationResult

    @property
    def all_verified(self) -> bool:
        return all(e.verified for e in self.entries) and len(self.entries) == len(
            self.census.orbit_classes
        )


def verify_listed_forms(catalog: str, census: ClassificationResult | None = None) -> CatalogReport:
    """Re-derive every catalog entry and match it against the census classes."""
    if catalog not in CATALOGS:
        raise ValueError(f"unknown catalog {catalog!r}; have {sorted(CATALOGS)}")
    n, d, extra, builder = CATALOGS[catalog]
    if census is None:
        census = classify(n, d, extra)
    class_keys = {form_key(rep) for rep, _ in census.orbit_classes}
    entries = []
    for i, raw in enumerate(builder(), start=1):
        f = normalize_integer_form(raw)
        orbit_keys = {
            form_key(normalize_integer_form(f.apply_permutation(perm)))
            for perm in itertools.permutations(range(1, n + 1))
        }
        rep_key = min(orbit_keys)
        entries.append(
            CatalogEntryReport(
                index=i,
                form=f,
                support_size=len(f.support()),
                annihilated=diff_by_ell(f).is_zero(),
                minimal=minimal_failure_check(f),
                in_census_classes=rep_key in class_keys,
            )
        )
    return CatalogReport(
        catalog=catalog, n=n, d=d, extra=extra, entries=tuple(entries), census=census
    )

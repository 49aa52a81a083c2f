"""Artinian monomial ideals generated in one degree, and the maximal-rank scan.

The weak Lefschetz property is decided degree by degree for multiplication by
ell = x1 + ... + xn on the quotient algebra.  For monomial ideals that single
linear form decides the property, so the verdict of wlp_check is the property
itself.  Failure witnesses in the top relevant degree are read off the dual
side: kernel forms of differentiation by ell on the degree-d complement of
the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import linalg
from .forms import PolyForm
from .monomials import (
    DegreeBasis,
    Monomial,
    canonical_sort,
    enumerate_basis,
    monomial_str,
    parse_monomial,
)


@dataclass(frozen=True)
class MonomialIdeal:
    """Generated by distinct degree-d monomials including every pure power x_i^d."""

    n: int
    d: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        seen = set()
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"{g} has {g.n} variables, expected {self.n}")
            if g.degree != self.d:
                raise ValueError(f"{g} has degree {g.degree}, expected {self.d}")
            if g in seen:
                raise ValueError(f"duplicate generator {g}")
            seen.add(g)
        for i in range(self.n):
            e = [0] * self.n
            e[i] = self.d
            if Monomial(tuple(e)) not in seen:
                raise ValueError(f"missing pure power x{i + 1}^{self.d}; the quotient must be artinian")
        if tuple(canonical_sort(self.generators)) != self.generators:
            raise ValueError("generators must be in canonical order; use from_generators")

    @classmethod
    def from_generators(cls, n: int, d: int, generators) -> "MonomialIdeal":
        return cls(n=n, d=d, generators=canonical_sort(generators))

    @classmethod
    def from_extra(cls, n: int, d: int, extra) -> "MonomialIdeal":
        """Pure powers plus the given additional degree-d monomials."""
        gens = set(extra)
        for i in range(n):
            e = [0] * n
            e[i] = d
            gens.add(Monomial(tuple(e)))
        return cls.from_generators(n, d, gens)

    @classmethod
    def from_json(cls, data: dict) -> "MonomialIdeal":
        n = int(data["n"])
        d = int(data["d"])
        gens = [parse_monomial(s, n) for s in data["generators"]]
        ideal = cls.from_generators(n, d, gens)
        if len(ideal.generators) != len(gens):
            raise ValueError("duplicate generators in input")
        return ideal

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "generators": [monomial_str(g) for g in self.generators],
        }

    @property
    def mu(self) -> int:
        """Number of minimal generators."""
        return len(self.generators)


@lru_cache(maxsize=None)
def cobasis(I: MonomialIdeal, e: int) -> tuple[Monomial, ...]:
    """Monomial basis of the degree-e part of the quotient, in canonical order."""
    if e < 0:
        raise ValueError("need e >= 0")
    if e < I.d:
        return enumerate_basis(I.n, e).monomials
    gens = I.generators
    return tuple(m for m in enumerate_basis(I.n, e) if not any(g.divides(m) for g in gens))


def hilbert_function(I: MonomialIdeal, e: int) -> int:
    if e < I.d:
        return comb(I.n + e - 1, e)
    return len(cobasis(I, e))


def socle_degree(I: MonomialIdeal) -> int:
    """Largest degree where the quotient is nonzero.

    Bounded by n*(d-1): beyond that every monomial clears some pure power.
    """
    last = I.d - 1
    for e in range(I.d, I.n * (I.d - 1) + 1):
        if hilbert_function(I, e) == 0:
            break
        last = e
    return last


def mult_map_rows(I: MonomialIdeal, e: int) -> list[list[int]]:
    """Integer matrix of multiplication by x1+...+xn from degree e to e+1 on the quotient."""
    source = cobasis(I, e)
    target = cobasis(I, e + 1)
    index = {m: i for i, m in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    for col, m in enumerate(source):
        for i in range(1, I.n + 1):
            r = index.get(m.multiply(i))
            if r is not None:
                rows[r][col] += 1
    return rows


def mult_map_matrix(I: MonomialIdeal, e: int) -> linalg.RationalMatrix:
    rows = mult_map_rows(I, e)
    if not rows:
        return linalg.RationalMatrix(rows=0, cols=len(cobasis(I, e)), entries=())
    return linalg.RationalMatrix.from_rows(rows)


def diff_matrix_rows(monomials, n: int, d: int) -> list[list[int]]:
    """Differentiation by y1+...+yn from the span of the given degree-d monomials.

    Rows are indexed by the full degree-(d-1) basis, columns by the input list.
    """
    target = enumerate_basis(n, d - 1)
    rows = [[0] * len(monomials) for _ in range(len(target))]
    for col, m in enumerate(monomials):
        if m.n != n or m.degree != d:
            raise ValueError(f"{m} is not a degree-{d} monomial in {n} variables")
        for i in range(1, n + 1):
            e = m.deg_i(i)
            if e:
                rows[target.index_of(m.lower(i))][col] = e
    return rows


def dual_diff_matrix(I: MonomialIdeal) -> linalg.RationalMatrix:
    """Matrix of differentiation by ell on the inverse system in degree d."""
    cols = cobasis(I, I.d)
    rows = diff_matrix_rows(cols, I.n, I.d)
    if not rows:
        return linalg.RationalMatrix(rows=0, cols=len(cols), entries=())
    return linalg.RationalMatrix.from_rows(rows)


def dual_kernel_forms(I: MonomialIdeal) -> list[PolyForm]:
    """Normalized basis of the ell-derivative kernel on the degree-d inverse system."""
    cols = cobasis(I, I.d)
    if not cols:
        return []
    rows = diff_matrix_rows(cols, I.n, I.d)
    vectors = linalg.nullspace_basis(linalg.RationalMatrix.from_rows(rows))
    forms = []
    for v in vectors:
        mapping = {m: c for m, c in zip(cols, v) if c}
        forms.append(PolyForm.from_terms(I.n, I.d, mapping))
    return forms


def fails_surjectivity_at_dminus1(I: MonomialIdeal) -> bool:
    """True iff multiplication by ell from degree d-1 to degree d is not onto."""
    rows = mult_map_rows(I, I.d - 1)
    target_dim = hilbert_function(I, I.d)
    if target_dim == 0:
        return False
    return linalg.rank_int_rows(rows) < target_dim


@dataclass(frozen=True)
class DegreeRecord:
    j: int
    dim_source: int
    dim_target: int
    rank: int
    maximal: bool
    failure_mode: str  # none | injectivity | surjectivity | both
    kernel_dim: int
    cokernel_dim: int

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "dim_source": self.dim_source,
            "dim_target": self.dim_target,
            "rank": self.rank,
            "maximal": self.maximal,
            "failure_mode": self.failure_mode,
            "kernel_dim": self.kernel_dim,
            "cokernel_dim": self.cokernel_dim,
        }


@dataclass(frozen=True)
class WlpReport:
    ideal: MonomialIdeal
    verdict: bool
    socle_degree: int
    records: tuple[DegreeRecord, ...]

    @property
    def first_failure(self) -> DegreeRecord | None:
        for r in self.records:
            if not r.maximal:
                return r
        return None

    def record_at(self, j: int) -> DegreeRecord | None:
        for r in self.records:
            if r.j == j:
                return r
        return None

    def to_json(self) -> dict:
        return {
            "ideal": self.ideal.to_json(),
            "verdict": self.verdict,
            "socle_degree": self.socle_degree,
            "mu": self.ideal.mu,
            "degrees": [r.to_json() for r in self.records],
        }


def _failure_mode(dim_source: int, dim_target: int) -> str:
    # the mode names the rank property the Hilbert function demanded
    if dim_source < dim_target:
        return "injectivity"
    if dim_source > dim_target:
        return "surjectivity"
    return "both"


def wlp_check(I: MonomialIdeal) -> WlpReport:
    """Scan multiplication by ell through every degree and report maximal-rank status.

    Degrees below d-1 are maps between full polynomial graded pieces and are
    recorded as maximal without elimination.
    """
    records = []
    for j in range(0, I.d - 1):
        ds = comb(I.n + j - 1, j)
        dt = comb(I.n + j, j + 1)
        records.append(
            DegreeRecord(
                j=j,
                dim_source=ds,
                dim_target=dt,
                rank=ds,
                maximal=True,
                failure_mode="none",
                kernel_dim=0,
                cokernel_dim=dt - ds,
            )
        )
    verdict = True
    j = I.d - 1
    cap = I.n * (I.d - 1) + 1
    while j <= cap:
        ds = hilbert_function(I, j)
        dt = hilbert_function(I, j + 1)
        if dt == 0:
            records.append(
                DegreeRecord(
                    j=j,
                    dim_source=ds,
                    dim_target=0,
                    rank=0,
                    maximal=True,
                    failure_mode="none",
                    kernel_dim=ds,
                    cokernel_dim=0,
                )
            )
            break
        r = linalg.rank_int_rows(mult_map_rows(I, j))
        maximal = r == min(ds, dt)
        mode = "none" if maximal else _failure_mode(ds, dt)
        records.append(
            DegreeRecord(
                j=j,
                dim_source=ds,
                dim_target=dt,
                rank=r,
                maximal=maximal,
                failure_mode=mode,
                kernel_dim=ds - r,
                cokernel_dim=dt - r,
            )
        )
        if not maximal:
            verdict = False
        j += 1
    return WlpReport(
        ideal=I,
        verdict=verdict,
        socle_degree=socle_degree(I),
        records=tuple(records),
    )

"""The linear matroid of derivative vectors on non-pure-power monomials.

Ground set: the degree-d monomials that are not pure powers.  Each element is
sent to its image under differentiation by y1+...+yn, a vector in the full
degree-(d-1) monomial basis; independence is linear independence of those
vectors over Q.  The girth of this matroid is the smallest Hilbert value in
degree d over equigenerated artinian ideals failing surjectivity one step
below, which is why circuits and their kernel forms matter here.

Circuits are enumerated through the kernel of the full image matrix: every
circuit is the support of a minimal-support kernel vector, and with kernel
dimension c each such vector spans the kernel slice vanishing on some c-1
coordinates.  Scanning those coordinate subsets therefore finds every
circuit; an exhaustive independence certification below the girth backs the
value with a brute-force search (batched modulo a prime, with any deficient
subset re-checked exactly).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import linalg
from .forms import PolyForm
from .ideals import diff_matrix_rows
from .monomials import Monomial, enumerate_basis

_P = 2_147_483_647
_CERT_SUBSET_CAP = 2_000_000
_CIRCUIT_WORK_CAP = 5_000_000


@dataclass(frozen=True)
class SurMatroid:
    n: int
    d: int
    ground: tuple[Monomial, ...]
    columns: tuple[tuple[int, ...], ...]  # image vectors, one per ground element

    @classmethod
    def build(cls, n: int, d: int) -> "SurMatroid":
        if n < 1 or d < 1:
            raise ValueError("need n >= 1 and d >= 1")
        ground = tuple(m for m in enumerate_basis(n, d) if not m.is_pure_power())
        rows = diff_matrix_rows(ground, n, d) if ground else []
        cols = tuple(tuple(r[j] for r in rows) for j in range(len(ground)))
        return cls(n=n, d=d, ground=ground, columns=cols)

    @property
    def ambient_dim(self) -> int:
        return comb(self.n + self.d - 2, self.d - 1)

    def column_rows(self, indices) -> list[list[int]]:
        """The selected image vectors as matrix rows (rank is transpose-invariant)."""
        return [list(self.columns[j]) for j in indices]


def is_independent(M: SurMatroid, subset) -> bool:
    subset = list(subset)
    indices = sorted(set(subset))
    if len(indices) != len(subset):
        raise ValueError("independence is asked of a set; duplicates given")
    if any(not 0 <= j < len(M.ground) for j in indices):
        raise ValueError("subset indices outside the ground set")
    if not indices:
        return True
    return linalg.rank_int_rows(M.column_rows(indices)) == len(indices)


def matroid_rank(M: SurMatroid, subset=None) -> int:
    indices = range(len(M.ground)) if subset is None else sorted(set(subset))
    if not indices:
        return 0
    return linalg.rank_int_rows(M.column_rows(indices))


@lru_cache(maxsize=None)
def kernel_basis(M: SurMatroid) -> tuple[tuple[int, ...], ...]:
    """Integer basis of the dependency space of the full image matrix."""
    if not M.ground:
        return ()
    rows = [[col[i] for col in M.columns] for i in range(M.ambient_dim)]
    return tuple(linalg.nullspace_basis(linalg.RationalMatrix.from_rows(rows)))


@dataclass(frozen=True)
class Circuit:
    indices: tuple[int, ...]  # positions in the ground set
    monomials: tuple[Monomial, ...]
    vector: tuple[int, ...]  # kernel coefficients on the circuit, normalized

    @property
    def size(self) -> int:
        return len(self.indices)

    def form(self, n: int, d: int) -> PolyForm:
        return PolyForm.from_terms(n, d, dict(zip(self.monomials, self.vector)))


@lru_cache(maxsize=None)
def circuits(M: SurMatroid) -> tuple[Circuit, ...]:
    """All circuits, via minimal supports of kernel vectors.

    The scan visits C(ground, corank-1) kernel slices; sizes far beyond the
    census scale are refused up front, before any rank work starts.
    """
    g = len(M.ground)
    ambient = len(enumerate_basis(M.n, M.d - 1).monomials)
    least_corank = g - ambient  # rank can never exceed the target dimension
    if least_corank > 1 and comb(g, least_corank - 1) > _CIRCUIT_WORK_CAP:
        raise ValueError(
            f"circuit enumeration needs at least {comb(g, least_corank - 1)}"
            f" kernel slices; cap is {_CIRCUIT_WORK_CAP}"
        )
    kernel = kernel_basis(M)
    c = len(kernel)
    if c == 0:
        return ()
    if c > 1 and comb(g, c - 1) > _CIRCUIT_WORK_CAP:
        raise ValueError(
            f"circuit enumeration needs {comb(g, c - 1)} kernel slices;"
            f" cap is {_CIRCUIT_WORK_CAP}"
        )
    found: dict[frozenset, tuple] = {}
    for zero_set in itertools.combinations(range(g), c - 1):
        rows = [[k[z] for k in kernel] for z in zero_set]
        if rows:
            sub = linalg.nullspace_basis(linalg.RationalMatrix.from_rows(rows))
        else:
            sub = [tuple(1 if i == j else 0 for j in range(c)) for i in range(c)]
        if len(sub) != 1:
            continue
        w = sub[0]
        v = [sum(w[i] * kernel[i][e] for i in range(c)) for e in range(g)]
        support = frozenset(e for e in range(g) if v[e])
        if support and support not in found:
            found[support] = linalg.normalize_int_vector(v)
    # keep inclusion-minimal supports only
    supports = sorted(found, key=len)
    minimal: list[frozenset] = []
    for s in supports:
        if not any(t < s for t in minimal):
            minimal.append(s)
    out = []
    for s in minimal:
        idx = tuple(sorted(s))
        vec = found[s]
        out.append(
            Circuit(
                indices=idx,
                monomials=tuple(M.ground[e] for e in idx),
                vector=tuple(vec[e] for e in idx),
            )
        )
    out.sort(key=lambda circ: (circ.size, circ.indices))
    return tuple(out)


def circuits_up_to(M: SurMatroid, smax: int) -> tuple[Circuit, ...]:
    """All inclusion-minimal dependent sets of size at most smax."""
    return tuple(c for c in circuits(M) if c.size <= smax)


def _certify_all_subsets_independent(M: SurMatroid, k: int) -> tuple[int, int]:
    """Brute-force check that every k-subset of the ground set is independent.

    Works modulo a prime in vectorized batches; a full-rank result there is
    conclusive, anything else is re-checked over Q.  Returns (subsets checked,
    exact re-checks).  Raises if a dependent subset shows up.
    """
    g = len(M.ground)
    if k <= 0:
        return 0, 0
    cols = np.array([list(c) for c in M.columns], dtype=np.int64).T % _P  # rows x g
    nrows = cols.shape[0]
    checked = 0
    rechecked = 0
    chunk: list[tuple[int, ...]] = []

    def flush(batch: list[tuple[int, ...]]):
        nonlocal checked, rechecked
        if not batch:
            return
        subs = np.array(batch, dtype=np.int64)
        T = np.ascontiguousarray(np.transpose(cols[:, subs], (1, 0, 2)))
        N = T.shape[0]
        piv = np.zeros(N, dtype=np.int64)
        idx = np.arange(N)
        rowidx = np.arange(nrows)
        for c in range(k):
            colvals = T[:, :, c]
            mask = (colvals != 0) & (rowidx[None, :] >= piv[:, None])
            has = mask.any(axis=1)
            first = np.where(has, mask.argmax(axis=1), piv)
            ra = T[idx, piv].copy()
            T[idx, piv] = T[idx, first]
            T[idx, first] = ra
            pv = T[idx, piv, c]
            below = (rowidx[None, :] > piv[:, None]) & has[:, None]
            prow = T[idx, piv][:, None, :]
            coeff = T[:, :, c]
            upd = (pv[:, None, None] * T - coeff[:, :, None] * prow) % _P
            T = np.where(below[:, :, None], upd, T)
            piv = piv + has
        checked += N
        for pos in np.nonzero(piv < k)[0]:
            subset = batch[pos]
            rechecked += 1
            if linalg.rank_int_rows(M.column_rows(subset)) < k:
                raise RuntimeError(
                    f"dependent {k}-subset {subset} found below the computed girth"
                )

    for subset in itertools.combinations(range(g), k):
        chunk.append(subset)
        if len(chunk) == 4096:
            flush(chunk)
            chunk = []
    flush(chunk)
    return checked, rechecked


@dataclass(frozen=True)
class GirthReport:
    n: int
    d: int
    girth: int | None  # None encodes an independent (free) matroid
    witness: Circuit | None
    certified: bool  # exhaustive below-bound subset search completed
    subsets_checked: int

    @property
    def is_infinite(self) -> bool:
        return self.girth is None


def girth_report(M: SurMatroid, certify: bool = True) -> GirthReport:
    """Girth with a witness circuit and an exhaustive below-bound certification."""
    if not M.ground:
        return GirthReport(M.n, M.d, None, None, certified=True, subsets_checked=0)
    circs = circuits(M)
    if not circs:
        # free matroid: full column rank is the certificate
        assert matroid_rank(M) == len(M.ground)
        return GirthReport(M.n, M.d, None, None, certified=True, subsets_checked=0)
    witness = circs[0]
    g = witness.size
    certified = False
    checked = 0
    if certify and comb(len(M.ground), g - 1) <= _CERT_SUBSET_CAP:
        checked, _ = _certify_all_subsets_independent(M, g - 1)
        certified = True
    return GirthReport(M.n, M.d, g, witness, certified=certified, subsets_checked=checked)


def girth(M: SurMatroid) -> int | None:
    return girth_report(M).girth


@dataclass(frozen=True)
class DimBounds:
    ground_size: int
    rank: int
    dim_independence_complex: int  # rank - 1
    ambient_bound: int  # dim of the degree-(d-1) basis, minus 1
    ambient_bound_ok: bool
    girth: int | None
    dim_dual_from_ground: int | None  # ground - girth - 1
    dim_dual_from_counts: int | None  # |basis_d| - n - girth - 1
    formulas_agree: bool


def dim_bounds(M: SurMatroid) -> DimBounds:
    r = matroid_rank(M)
    gr = girth(M)
    total = comb(M.n + M.d - 1, M.d)
    dual_a = None if gr is None else len(M.ground) - gr - 1
    dual_b = None if gr is None else total - M.n - gr - 1
    return DimBounds(
        ground_size=len(M.ground),
        rank=r,
        dim_independence_complex=r - 1,
        ambient_bound=M.ambient_dim - 1,
        ambient_bound_ok=r - 1 <= M.ambient_dim - 1,
        girth=gr,
        dim_dual_from_ground=dual_a,
        dim_dual_from_counts=dual_b,
        formulas_agree=dual_a == dual_b,
    )


def alexander_dual_check(M: SurMatroid) -> bool:
    """Complements of dependent sets form the Alexander dual of the independence complex.

    Exhaustive over all ground subsets; limited to small ground sets.
    """
    g = len(M.ground)
    if g > 12:
        raise ValueError("exhaustive subset check limited to ground sets of size <= 12")
    everything = frozenset(range(g))
    dependent = set()
    for size in range(g + 1):
        for s in itertools.combinations(range(g), size):
            if not is_independent(M, s):
                dependent.add(frozenset(s))
    dual_faces = {everything - s for s in dependent}
    for size in range(g + 1):
        for t in itertools.combinations(range(g), size):
            t = frozenset(t)
            complement_is_nonface = (everything - t) in dependent
            if (t in dual_faces) != complement_is_nonface:
                return False
    return True

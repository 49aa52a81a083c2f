"""Dense exact linear algebra over the rationals.

Everything here returns exact answers.  Rank and determinant clear
denominators and run fraction-free (Bareiss) elimination over the integers.
A fixed large prime gives a cheap one-sided certificate: full rank modulo p
implies full rank over Q, and a nonzero determinant modulo p implies a
nonzero determinant over Z.  Whenever the modular result is inconclusive
(rank deficient, zero residue) the computation is redone exactly, so the
prime never decides a negative answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

_P = 2_147_483_647  # Mersenne prime 2^31 - 1


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix of Fractions, row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        entries = tuple(Fraction(x) for r in rows for x in r)
        return cls(rows=nr, cols=nc, entries=entries)

    def entry(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise ValueError(f"index ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row_lists(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "RationalMatrix":
        entries = tuple(
            self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)
        )
        return RationalMatrix(rows=self.cols, cols=self.rows, entries=entries)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [str(x) for x in self.entries],
        }

    def __str__(self) -> str:
        body = self.row_lists()
        return "\n".join(" ".join(str(x) for x in row) for row in body)


def _cleared_int_rows(M: RationalMatrix) -> list[list[int]]:
    """Rows rescaled to integers; row scaling never changes rank."""
    out = []
    for row in M.row_lists():
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        out.append([int(x * scale) for x in row])
    return out


def rank_int_rows(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix given as row lists."""
    if not rows or not rows[0]:
        return 0
    r = _rank_mod_p(rows)
    if r == min(len(rows), len(rows[0])):
        return r  # full rank mod p certifies full rank over Q
    return _rank_bareiss(rows)


def _rank_mod_p(rows: list[list[int]], p: int = _P) -> int:
    m = [[x % p for x in row] for row in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    for col in range(nc):
        piv = None
        for i in range(rank, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[col]
        for i in range(rank + 1, nr):
            f = m[i][col]
            if f:
                mi = m[i]
                for j in range(col, nc):
                    mi[j] = (pv * mi[j] - f * pr[j]) % p
        rank += 1
        if rank == nr:
            break
    return rank


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination with full pivoting; exact integer rank."""
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    rank = 0
    prev = 1
    col = 0
    while rank < nr and col < nc:
        piv = None
        for i in range(rank, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pr = m[rank]
        pv = pr[col]
        for i in range(rank + 1, nr):
            f = m[i][col]
            mi = m[i]
            for j in range(col + 1, nc):
                mi[j] = (pv * mi[j] - f * pr[j]) // prev
            mi[col] = 0
        prev = pv
        rank += 1
        col += 1
    return rank


def rank(M: RationalMatrix) -> int:
    return rank_int_rows(_cleared_int_rows(M))


def _det_bareiss(rows: list[list[int]]) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pv = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k]
            mi = m[i]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (pv * mi[j] - f * mk[j]) // prev
            mi[k] = 0
        prev = pv
    return sign * m[n - 1][n - 1]


def _det_mod_p(rows: list[list[int]], p: int = _P) -> int:
    m = [[x % p for x in row] for row in rows]
    n = len(m)
    det = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = (-det) % p
        pv = m[k][k]
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                mi = m[i]
                mk = m[k]
                for j in range(k, n):
                    mi[j] = (mi[j] - f * mk[j]) % p
    return det


def det_int_rows(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    return _det_bareiss(rows)


def is_nonzero_det_int_rows(rows: list[list[int]]) -> bool:
    """Exact zero test for the determinant, cheap in the nonzero case."""
    if _det_mod_p(rows) != 0:
        return True
    return _det_bareiss(rows) != 0


def determinant(M: RationalMatrix) -> Fraction:
    if M.rows != M.cols:
        raise ValueError("determinant needs a square matrix")
    scale = Fraction(1)
    int_rows = []
    for row in M.row_lists():
        s = 1
        for x in row:
            s = s * x.denominator // gcd(s, x.denominator)
        scale *= s
        int_rows.append([int(x * s) for x in row])
    return Fraction(_det_bareiss(int_rows)) / scale


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (matrix, pivot column list)."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(nc):
        piv = None
        for i in range(r, nr):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nr:
            break
    return m, pivots


def normalize_int_vector(vec) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with positive first nonzero entry."""
    fracs = [Fraction(x) for x in vec]
    scale = 1
    for x in fracs:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def nullspace_basis(M: RationalMatrix) -> list[tuple[int, ...]]:
    """Kernel basis in reduced echelon pivot order, integer-normalized."""
    if M.cols == 0:
        return []
    if M.rows == 0:
        rref, pivots = [], []
    else:
        rref, pivots = _rref(M.row_lists())
    pivot_set = set(pivots)
    free_cols = [j for j in range(M.cols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for r, pcol in enumerate(pivots):
            v[pcol] = -rref[r][f]
        basis.append(normalize_int_vector(v))
    return basis


def nullspace_int_rows(rows: list[list[int]]) -> list[tuple[int, ...]]:
    if not rows:
        raise ValueError("use nullspace_basis for explicit dimensions")
    return nullspace_basis(RationalMatrix.from_rows(rows))


def toeplitz(k: int, m: int) -> RationalMatrix:
    """The (k+1) x (m+1) banded binomial matrix with entry C(m-k, j-i)."""
    if k < 0 or m < 0:
        raise ValueError("need k, m >= 0")
    if k > m:
        raise ValueError(f"need k <= m, got k={k}, m={m}")
    rows = []
    for i in range(k + 1):
        rows.append([comb(m - k, j - i) if 0 <= j - i <= m - k else 0 for j in range(m + 1)])
    return RationalMatrix.from_rows(rows)


@dataclass(frozen=True)
class MinorsReport:
    all_nonzero: bool
    minors_checked: int
    zero_witness: tuple[int, ...] | None  # column indices of the first zero minor


def all_maximal_minors_nonzero(M: RationalMatrix) -> MinorsReport:
    """Check every maximal (rows x rows) minor; exact, with a witness on failure."""
    if M.rows > M.cols:
        raise ValueError("expected a wide matrix (rows <= cols)")
    int_rows = _cleared_int_rows(M)
    checked = 0
    for cols in itertools.combinations(range(M.cols), M.rows):
        sub = [[row[j] for j in cols] for row in int_rows]
        checked += 1
        if not is_nonzero_det_int_rows(sub):
            return MinorsReport(all_nonzero=False, minors_checked=checked, zero_witness=cols)
    return MinorsReport(all_nonzero=True, minors_checked=checked, zero_witness=None)

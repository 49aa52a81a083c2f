"""Monomials as exponent vectors, and graded monomial bases.

Variables are indexed 1..n everywhere.  A degree-d basis is ordered
graded-lexicographically with variable 1 greatest, largest monomial first,
so for n = 3, d = 2 the order is x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb


@dataclass(frozen=True)
class Monomial:
    """A monomial in len(exponents) variables."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) == 0:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def deg_i(self, i: int) -> int:
        """Exponent of variable i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} outside 1..{self.n}")
        return self.exponents[i - 1]

    def is_pure_power(self) -> bool:
        """True iff exactly one exponent is nonzero.  The unit monomial is not a pure power."""
        return sum(1 for e in self.exponents if e > 0) == 1

    def multiply(self, i: int) -> "Monomial":
        """Multiply by variable i."""
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} outside 1..{self.n}")
        e = list(self.exponents)
        e[i - 1] += 1
        return Monomial(tuple(e))

    def lower(self, i: int) -> "Monomial":
        """Divide by variable i; requires a positive exponent there."""
        if self.deg_i(i) == 0:
            raise ValueError(f"variable {i} does not divide {self}")
        e = list(self.exponents)
        e[i - 1] -= 1
        return Monomial(tuple(e))

    def divides(self, other: "Monomial") -> bool:
        if self.n != other.n:
            raise ValueError("mixed variable counts")
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def permute(self, perm: tuple[int, ...]) -> "Monomial":
        """Relabel variables: new variable j carries the exponent of old variable perm[j-1]."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{self.n}")
        return Monomial(tuple(self.exponents[p - 1] for p in perm))

    def __str__(self) -> str:
        return monomial_str(self)


def monomial_str(m: Monomial) -> str:
    """Render as x1^a*x2^b*..., omitting zero exponents and unit powers."""
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 0:
            continue
        parts.append(f"x{i}" if e == 1 else f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of monomial_str for monomials in n variables."""
    text = text.strip()
    exps = [0] * n
    if text == "1":
        return Monomial(tuple(exps))
    for factor in text.split("*"):
        match = _FACTOR_RE.match(factor.strip())
        if match is None:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside 1..{n} in {text!r}")
        e = int(match.group(2)) if match.group(2) else 1
        exps[i - 1] += e
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class DegreeBasis:
    """All monomials of one degree, in canonical order, with index lookup."""

    n: int
    d: int
    monomials: tuple[Monomial, ...]
    _index: dict = field(compare=False, repr=False)

    def index_of(self, m: Monomial) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise ValueError(f"{m} is not in the degree-{self.d} basis on {self.n} variables")

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, i: int) -> Monomial:
        return self.monomials[i]


@lru_cache(maxsize=None)
def enumerate_basis(n: int, d: int) -> DegreeBasis:
    """The degree-d monomial basis on n variables, canonically ordered."""
    if n < 1:
        raise ValueError("need n >= 1")
    if d < 0:
        raise ValueError("need d >= 0")
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), d, n)
    monomials = tuple(Monomial(e) for e in out)
    assert len(monomials) == comb(n + d - 1, d)
    index = {m: i for i, m in enumerate(monomials)}
    return DegreeBasis(n=n, d=d, monomials=monomials, _index=index)


def degree_slice(basis: DegreeBasis, i: int, k: int) -> tuple[Monomial, ...]:
    """The basis monomials with exponent k at variable i, in basis order."""
    if not 1 <= i <= basis.n:
        raise ValueError(f"variable index {i} outside 1..{basis.n}")
    if not 0 <= k <= basis.d:
        raise ValueError(f"slice level {k} outside 0..{basis.d}")
    return tuple(m for m in basis if m.deg_i(i) == k)


def canonical_sort(monomials) -> tuple[Monomial, ...]:
    """Sort monomials of equal degree into basis order (descending lex)."""
    return tuple(sorted(monomials, key=lambda m: m.exponents, reverse=True))

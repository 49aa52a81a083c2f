"""Exact arithmetic in Z[w] for w a primitive d-th root of unity.

Elements are integer coordinate vectors on 1, w, ..., w^(phi(d)-1), reduced
modulo the d-th cyclotomic polynomial.  The representation is canonical, so
equality and the zero test are coordinate comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (ascending coefficients); den monic, remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    assert den[-1] == 1
    quot = [0] * max(len(num) - dd, 0)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("need d >= 1")
    poly = [-1] + [0] * (d - 1) + [1]  # x^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly(e))
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi(d: int) -> int:
    return len(cyclotomic_poly(d)) - 1


def _reduce(d: int, dense: list[int]) -> tuple[int, ...]:
    """Reduce a dense coefficient list first by w^d = 1, then mod the cyclotomic polynomial."""
    wrapped = [0] * d
    for exp, c in enumerate(dense):
        if c:
            wrapped[exp % d] += c
    mod = cyclotomic_poly(d)
    dd = len(mod) - 1
    for i in range(d - 1, dd - 1, -1):
        c = wrapped[i]
        if c:
            wrapped[i] = 0
            for j in range(dd):
                wrapped[i - dd + j] -= c * mod[j]
    return tuple(wrapped[:dd])


@dataclass(frozen=True)
class CycloInt:
    """An element of Z[w], w a primitive root of unity of the given order."""

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("need order >= 1")
        if len(self.coeffs) != _phi(self.order):
            raise ValueError(
                f"need {_phi(self.order)} coordinates for order {self.order}, got {len(self.coeffs)}"
            )

    @classmethod
    def from_int(cls, order: int, value: int) -> "CycloInt":
        coeffs = [0] * _phi(order)
        coeffs[0] = value
        return cls(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> "CycloInt":
        return cls.from_int(order, 0)

    @classmethod
    def one(cls, order: int) -> "CycloInt":
        return cls.from_int(order, 1)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycloInt):
            if other.order != self.order:
                raise ValueError(f"mixed root orders {self.order} and {other.order}")
            return other
        if isinstance(other, int):
            return CycloInt.from_int(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloInt(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloInt(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, int):
            return CycloInt(self.order, tuple(other * a for a in self.coeffs))
        prod = [0] * (2 * _phi(self.order))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloInt(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not defined here")
        result = CycloInt.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "CycloInt":
        """The ring automorphism w -> w^(order-1), i.e. complex conjugation."""
        d = self.order
        dense = [0] * d
        for i, c in enumerate(self.coeffs):
            dense[(d - i) % d] += c
        return CycloInt(d, _reduce(d, dense))

    def as_int(self) -> int:
        """The value as a rational integer; raises when not rational."""
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        import cmath

        d = self.order
        w = cmath.exp(2j * cmath.pi / d)
        return sum(c * w**i for i, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
                continue
            power = "w" if i == 1 else f"w^{i}"
            if c == 1:
                parts.append(power)
            elif c == -1:
                parts.append(f"-{power}")
            else:
                parts.append(f"{c}*{power}")
        text = parts[0]
        for p in parts[1:]:
            text += p if p.startswith("-") else "+" + p
        return text


def root_power(order: int, j: int) -> CycloInt:
    """w^j in canonical coordinates; j may be any integer."""
    dense = [0] * order
    dense[j % order] = 1
    return CycloInt(order, _reduce(order, dense))

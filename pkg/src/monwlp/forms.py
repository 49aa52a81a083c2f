"""Homogeneous polynomial forms and differentiation by the all-ones linear form.

Forms are exact: coefficients are integers, Fractions, or CycloInt values
(never floats).  The central operator is diff_by_ell, differentiation by
ell = y1 + ... + yn acting on the dual polynomial ring.  Kernel elements of
that operator are the witnesses for failures of maximal rank, and
support_census collects the combinatorial facts about such a kernel form
(slice sizes, slice coefficient sums, lower bounds on the support size).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, perm

from .monomials import Monomial, monomial_str


def _sort_terms(mapping: dict) -> tuple:
    items = [(m, c) for m, c in mapping.items() if c]
    items.sort(key=lambda mc: mc[0].exponents, reverse=True)
    return tuple(items)


@dataclass(frozen=True)
class PolyForm:
    """A homogeneous form; terms are kept in canonical monomial order."""

    n: int
    degree: int
    terms: tuple

    @classmethod
    def from_terms(cls, n: int, degree: int, mapping: dict) -> "PolyForm":
        for m in mapping:
            if m.n != n:
                raise ValueError(f"{m} has {m.n} variables, expected {n}")
            if m.degree != degree:
                raise ValueError(f"{m} has degree {m.degree}, expected {degree}")
        return cls(n=n, degree=degree, terms=_sort_terms(mapping))

    @classmethod
    def zero(cls, n: int, degree: int) -> "PolyForm":
        return cls(n=n, degree=degree, terms=())

    @classmethod
    def monomial(cls, m: Monomial, coeff=1) -> "PolyForm":
        return cls.from_terms(m.n, m.degree, {m: coeff})

    def coefficient(self, m: Monomial):
        for mm, c in self.terms:
            if mm == m:
                return c
        return 0

    def as_dict(self) -> dict:
        return dict(self.terms)

    def support(self) -> tuple[Monomial, ...]:
        return tuple(m for m, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PolyForm") -> "PolyForm":
        if not isinstance(other, PolyForm):
            return NotImplemented
        if other.n != self.n or other.degree != self.degree:
            raise ValueError("can only add forms of equal degree and variable count")
        acc = self.as_dict()
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return PolyForm(self.n, self.degree, _sort_terms(acc))

    def __neg__(self) -> "PolyForm":
        return PolyForm(self.n, self.degree, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return self + (-other)

    def scale(self, scalar) -> "PolyForm":
        if not scalar:
            return PolyForm.zero(self.n, self.degree)
        acc = {m: c * scalar for m, c in self.terms}
        return PolyForm(self.n, self.degree, _sort_terms(acc))

    def __mul__(self, other):
        if isinstance(other, PolyForm):
            if other.n != self.n:
                raise ValueError("mixed variable counts")
            acc: dict = {}
            for m1, c1 in self.terms:
                e1 = m1.exponents
                for m2, c2 in other.terms:
                    m = Monomial(tuple(a + b for a, b in zip(e1, m2.exponents)))
                    acc[m] = acc.get(m, 0) + c1 * c2
            return PolyForm(self.n, self.degree + other.degree, _sort_terms(acc))
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def shift_variable(self, i: int, k: int) -> "PolyForm":
        """Multiply by the k-th power of variable i."""
        acc = {m_raise(m, i, k): c for m, c in self.terms}
        return PolyForm(self.n, self.degree + k, _sort_terms(acc))

    def map_coefficients(self, fn) -> "PolyForm":
        acc = {m: fn(c) for m, c in self.terms}
        return PolyForm(self.n, self.degree, _sort_terms(acc))

    def apply_permutation(self, perm_tuple: tuple[int, ...]) -> "PolyForm":
        acc = {m.permute(perm_tuple): c for m, c in self.terms}
        return PolyForm(self.n, self.degree, _sort_terms(acc))

    def max_degree_in(self, i: int) -> int:
        """Largest exponent of variable i over the support (0 for the zero form)."""
        return max((m.deg_i(i) for m, _ in self.terms), default=0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "terms": [
                {"monomial": monomial_str(m), "coefficient": str(c)} for m, c in self.terms
            ],
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"({c})*{monomial_str(m)}" for m, c in self.terms)


def m_raise(m: Monomial, i: int, k: int) -> Monomial:
    e = list(m.exponents)
    e[i - 1] += k
    return Monomial(tuple(e))


@dataclass(frozen=True)
class LinearForm:
    """A degree-one form given by its coefficient vector."""

    n: int
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.n:
            raise ValueError("coefficient count must equal the variable count")

    def to_form(self) -> PolyForm:
        acc = {}
        for i, c in enumerate(self.coefficients):
            if c:
                e = [0] * self.n
                e[i] = 1
                acc[Monomial(tuple(e))] = c
        return PolyForm(self.n, 1, _sort_terms(acc))


def expand_product(factors, n: int | None = None) -> PolyForm:
    """Multiply out a list of forms (LinearForm or PolyForm)."""
    factors = list(factors)
    if not factors:
        if n is None:
            raise ValueError("empty product needs an explicit variable count")
        unit = Monomial((0,) * n)
        return PolyForm.from_terms(n, 0, {unit: 1})
    forms = [f.to_form() if isinstance(f, LinearForm) else f for f in factors]
    if n is not None and forms[0].n != n:
        raise ValueError("variable count mismatch")
    result = forms[0]
    for f in forms[1:]:
        result = result * f
    return result


def _diff_ell_raw(f: PolyForm, variables=None) -> PolyForm:
    """Sum of partial derivatives over the listed variables (all by default)."""
    if f.degree == 0:
        return PolyForm.zero(f.n, 0)
    variables = range(1, f.n + 1) if variables is None else variables
    acc: dict = {}
    for m, c in f.terms:
        for i in variables:
            e = m.deg_i(i)
            if e:
                key = m.lower(i)
                acc[key] = acc.get(key, 0) + e * c
    return PolyForm(f.n, f.degree - 1, _sort_terms(acc))


def diff_by_ell(f: PolyForm) -> PolyForm:
    """Differentiate by y1 + ... + yn; degree drops by one."""
    if f.degree < 1:
        raise ValueError("differentiation needs degree >= 1")
    return _diff_ell_raw(f)


def _slice_decomposition(f: PolyForm, j: int) -> dict[int, PolyForm]:
    """Write f = sum_t yj^t * g_t with g_t free of variable j."""
    slices: dict[int, dict] = {}
    for m, c in f.terms:
        t = m.deg_i(j)
        e = list(m.exponents)
        e[j - 1] = 0
        slices.setdefault(t, {})[Monomial(tuple(e))] = c
    return {
        t: PolyForm(f.n, f.degree - t, _sort_terms(mapping)) for t, mapping in slices.items()
    }


def _diff_closed_form(f: PolyForm, c: int, j: int) -> PolyForm:
    """The c-th ell-derivative computed from the slice decomposition along variable j."""
    d = f.degree
    others = [i for i in range(1, f.n + 1) if i != j]
    slices = _slice_decomposition(f, j)
    result = PolyForm.zero(f.n, d - c)
    for k in range(0, d - c + 1):
        for i in range(0, c + 1):
            t = k + c - i
            g = slices.get(t)
            if g is None:
                continue
            h = g
            for _ in range(i):
                h = _diff_ell_raw(h, others)
            if h.is_zero():
                continue
            coeff = perm(k + c - i, c - i) * comb(c, i)
            result = result + h.shift_variable(j, k).scale(coeff)
    return result


def diff_by_ell_power(f: PolyForm, c: int, pivot_variable: int = 1) -> PolyForm:
    """Apply diff_by_ell c times; cross-checked against the slice-decomposition formula."""
    if not 1 <= c <= f.degree:
        raise ValueError(f"need 1 <= c <= {f.degree}, got {c}")
    iterated = f
    for _ in range(c):
        iterated = _diff_ell_raw(iterated)
    closed = _diff_closed_form(f, c, pivot_variable)
    if iterated != closed:
        raise AssertionError("iterated and closed-form ell-derivatives disagree")
    return iterated


@dataclass(frozen=True)
class AnnihilatorReport:
    exponent: int  # least e with the e-th ell-derivative zero
    bound_base: int  # degree - exponent; the support bound base when >= 0

    @property
    def min_support_bound(self) -> int | None:
        return self.bound_base + 2 if self.bound_base >= 0 else None


def min_annihilator_exponent(f: PolyForm) -> AnnihilatorReport:
    """Least e >= 1 with ell^e annihilating f; f must be nonzero."""
    if f.is_zero():
        raise ValueError("the zero form is annihilated by every power")
    g = f
    e = 0
    while True:
        e += 1
        g = _diff_ell_raw(g)
        if g.is_zero():
            return AnnihilatorReport(exponent=e, bound_base=f.degree - e)


def translate_by_ones(f: PolyForm) -> dict[Monomial, object]:
    """Coefficients of f(y1 + 1, ..., yn + 1); the result mixes degrees."""
    acc: dict = {}
    for m, c in f.terms:
        # expand prod_i (yi + 1)^{e_i} term by term
        partial = {Monomial((0,) * f.n): c}
        for i, e in enumerate(m.exponents, start=1):
            if e == 0:
                continue
            nxt: dict = {}
            for mm, cc in partial.items():
                for t in range(e + 1):
                    key = m_raise(mm, i, t)
                    nxt[key] = nxt.get(key, 0) + cc * comb(e, t)
            partial = nxt
        for mm, cc in partial.items():
            acc[mm] = acc.get(mm, 0) + cc
    return {m: c for m, c in acc.items() if c}


def depends_only_on_differences(f: PolyForm) -> bool:
    """True iff f is invariant under translating all variables by a common constant.

    Equivalent to being annihilated by y1 + ... + yn; both are computed and the
    equivalence is asserted.
    """
    translated = translate_by_ones(f)
    invariant = translated == dict(f.terms)
    if f.degree >= 1:
        annihilated = _diff_ell_raw(f).is_zero()
    else:
        annihilated = True
    if invariant != annihilated:
        raise AssertionError("translation invariance disagrees with the derivative test")
    return invariant


@dataclass(frozen=True)
class VariableSlices:
    i: int
    a_i: int  # largest exponent of variable i over the support
    counts: tuple[int, ...]  # slice sizes for exponent levels 0..degree
    sums_zero: tuple[bool, ...]  # per level: the slice coefficient sum vanishes


@dataclass(frozen=True)
class SupportCensus:
    n: int
    degree: int
    size: int
    ell_annihilated: bool
    annihilator_exponent: int
    bound_base: int
    min_support_ok: bool | None  # size >= bound_base + 2 (None when no bound applies)
    variables: tuple[VariableSlices, ...]
    slice_sums_ok: bool | None  # levels below degree sum to zero when the pure power is absent
    slices_nonempty_ok: bool | None  # levels 0..a_i are all populated
    slice_lower_bounds_ok: bool | None  # three variables: |level k| >= degree - a_i + 1 for k <= a_i
    product_bound_ok: bool | None  # size >= (a_i+1)(degree-a_i+1) for every i with a_i >= 1


def support_census(f: PolyForm) -> SupportCensus:
    """Support statistics of a form, with the annihilation-driven bound flags.

    Bounds that require f to be in the kernel of diff_by_ell are reported as
    None (vacuous) when it is not.
    """
    if f.is_zero():
        raise ValueError("census of the zero form is not defined")
    d = f.degree
    report = min_annihilator_exponent(f)
    annihilated = report.exponent == 1
    size = len(f.terms)

    variables = []
    for i in range(1, f.n + 1):
        counts = [0] * (d + 1)
        sums: list = [0] * (d + 1)
        for m, c in f.terms:
            k = m.deg_i(i)
            counts[k] += 1
            sums[k] = sums[k] + c
        a_i = max((m.deg_i(i) for m, _ in f.terms), default=0)
        variables.append(
            VariableSlices(
                i=i,
                a_i=a_i,
                counts=tuple(counts),
                sums_zero=tuple(not s for s in sums),
            )
        )

    min_support_ok = None if report.bound_base < 0 else size >= report.bound_base + 2

    slice_sums_ok = None
    slices_nonempty_ok = None
    slice_lower_bounds_ok = None
    product_bound_ok = None
    if annihilated:
        pure = {i: any(m.deg_i(i) == d for m, _ in f.terms) for i in range(1, f.n + 1)}
        slice_sums_ok = all(
            all(v.sums_zero[k] for k in range(d))
            for v in variables
            if not pure[v.i]
        )
        slices_nonempty_ok = all(
            all(v.counts[k] > 0 for k in range(v.a_i + 1)) for v in variables
        )
        if f.n == 3:
            slice_lower_bounds_ok = all(
                all(v.counts[k] >= d - v.a_i + 1 for k in range(v.a_i + 1)) for v in variables
            )
        bounds = [(v.a_i + 1) * (d - v.a_i + 1) for v in variables if v.a_i >= 1]
        if bounds:
            product_bound_ok = all(size >= b for b in bounds)

    return SupportCensus(
        n=f.n,
        degree=d,
        size=size,
        ell_annihilated=annihilated,
        annihilator_exponent=report.exponent,
        bound_base=report.bound_base,
        min_support_ok=min_support_ok,
        variables=tuple(variables),
        slice_sums_ok=slice_sums_ok,
        slices_nonempty_ok=slices_nonempty_ok,
        slice_lower_bounds_ok=slice_lower_bounds_ok,
        product_bound_ok=product_bound_ok,
    )


def normalize_integer_form(f: PolyForm) -> PolyForm:
    """Rescale a rational form to coprime integer coefficients, first term positive."""
    if f.is_zero():
        return f
    from math import gcd

    fracs = [Fraction(c) for _, c in f.terms]
    scale = 1
    for x in fracs:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return PolyForm(f.n, f.degree, tuple((m, c) for (m, _), c in zip(f.terms, ints)))


def form_key(f: PolyForm) -> tuple:
    """Hashable canonical key for deduplication and ordering of integer forms."""
    return tuple((m.exponents, c) for m, c in f.terms)

"""Closed-form Hilbert data for ideals attached to unions of subspaces.

Given the dimension function of an arrangement of proper subspaces of K^n,
this module computes the family of reduction polynomials p_S(t), the Hilbert
series of the product ideal J = I_1 ... I_m as an exact rational function
t^m p(t)/(1-t)^n, the Betti numbers read off p(t), the closed-form series
available when the arrangement is transversal, and Hilbert-polynomial
extraction from any numerator over (1-t)^n.

The series of the intersection ideal I is deliberately absent: it is not
determined by the dimension function alone, so it is only available through
the degree-by-degree oracle or, for transversal arrangements, through the
transversal series up to a polynomial correction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .arrangement import DimensionFunction
from .ratpoly import (
    ONE,
    ZERO,
    QPoly,
    binom,
    expand_rational,
    inverse_of_t_mod,
    one_minus_t_pow,
    poly_mod_one_minus_t_pow,
)

RationalFunction = tuple[QPoly, int]


def _minus_t_pow(k: int) -> QPoly:
    """(-t)^k as a polynomial."""
    return QPoly((0,) * k + ((-1) ** k,))


@dataclass(frozen=True)
class PSFamily:
    """The reduction polynomials p_S(t), indexed by subset bitmask."""

    polys_by_mask: tuple[QPoly, ...]

    def __init__(self, polys_by_mask: Sequence[QPoly]):
        polys_by_mask = tuple(polys_by_mask)
        size = len(polys_by_mask)
        if size == 0 or size & (size - 1):
            raise ValueError("family length must be a power of two")
        if polys_by_mask[0] != ONE:
            raise ValueError("the empty-set polynomial must be 1")
        object.__setattr__(self, "polys_by_mask", polys_by_mask)

    @property
    def num_subspaces(self) -> int:
        return len(self.polys_by_mask).bit_length() - 1

    def p(self, mask: int) -> QPoly:
        return self.polys_by_mask[mask]

    @property
    def top(self) -> QPoly:
        """p_S for the full index set."""
        return self.polys_by_mask[-1]


def compute_ps_family(d: DimensionFunction) -> PSFamily:
    """Solve the defining congruences for all p_S in cardinality order.

    For nonempty S with subset codimension c_S, p_S is the unique polynomial
    of degree < c_S with sum over X subsets of S of (-t)^|X| p_X divisible by
    (1-t)^{c_S}.  Since t is invertible mod (1-t)^{c_S}, the congruence is
    solved directly by multiplying the known part by the inverse of (-t)^|S|.
    """
    m = d.num_subspaces
    polys: list[QPoly] = [ONE] * (1 << m)
    for mask in sorted(range(1, 1 << m), key=lambda s: (s.bit_count(), s)):
        c = d.codim_of(mask)
        q = ZERO
        sub = (mask - 1) & mask
        while True:
            q = q - polys[sub] * _minus_t_pow(sub.bit_count())
            if sub == 0:
                break
            sub = (sub - 1) & mask
        size = mask.bit_count()
        signed = q if size % 2 == 0 else -q
        polys[mask] = poly_mod_one_minus_t_pow(
            signed * inverse_of_t_mod(c) ** size, c
        )
    return PSFamily(polys)


def ps_family_satisfies_congruences(family: PSFamily, d: DimensionFunction) -> bool:
    """Re-verify every defining congruence and degree bound from scratch."""
    if family.num_subspaces != d.num_subspaces:
        return False
    for mask in range(1 << d.num_subspaces):
        c = d.codim_of(mask)
        if mask and family.p(mask).degree >= c:
            return False
        total = ZERO
        sub = mask
        while True:
            total = total + family.p(sub) * _minus_t_pow(sub.bit_count())
            if sub == 0:
                break
            sub = (sub - 1) & mask
        if poly_mod_one_minus_t_pow(total, c):
            return False
    return True


@dataclass(frozen=True)
class HilbertSeriesJ:
    """Hilbert series of the product ideal: numerator/(1-t)^n.

    The numerator is t^m p(t) where m is the number of subspaces, so all
    coefficients below degree m vanish and deg p <= n-1.
    """

    numerator: QPoly
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError("n and m must be at least 1")
        if any(self.numerator.coeff(i) for i in range(self.m)):
            raise ValueError("numerator must be divisible by t^m")
        if self.numerator.degree - self.m > self.n - 1:
            raise ValueError("numerator degree exceeds m + n - 1")

    @property
    def p(self) -> QPoly:
        """The numerator with t^m divided out."""
        return QPoly(self.numerator.coeffs[self.m :])

    def coefficients(self, order: int) -> tuple[Fraction, ...]:
        return expand_rational(self.numerator, self.n, order).coeffs

    def table(self, max_degree: int) -> tuple[int, ...]:
        """Graded dimensions dim J_d for d = 0..max_degree."""
        values = self.coefficients(max_degree)
        if any(v.denominator != 1 or v < 0 for v in values):
            raise ArithmeticError("series coefficients must be naturals")
        return tuple(int(v) for v in values)

    def hilbert_polynomial(self) -> "HilbertPolynomial":
        return hilbert_polynomial_from_numerator(self.numerator, self.n)

    def __str__(self) -> str:
        return f"({self.numerator.to_str()})/(1 - t)^{self.n}"


def hilbert_series_J(d: DimensionFunction) -> HilbertSeriesJ:
    """Hilbert series of the product ideal, t^m p(t)/(1-t)^n."""
    family = compute_ps_family(d)
    return HilbertSeriesJ(
        numerator=family.top.shift(d.num_subspaces),
        n=d.ambient_dim,
        m=d.num_subspaces,
    )


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers of the product ideal's linear resolution.

    betti[i] counts generators in homological degree i; all of them sit in
    internal degree m + i, so the graded table is determined by the list.
    """

    betti: tuple[int, ...]
    m: int

    def __init__(self, betti: Sequence[int], m: int):
        betti = tuple(int(b) for b in betti)
        if any(b < 0 for b in betti):
            raise ValueError("Betti numbers must be nonnegative")
        if betti and betti[-1] == 0:
            raise ValueError("trailing zero Betti numbers must be trimmed")
        object.__setattr__(self, "betti", betti)
        object.__setattr__(self, "m", m)

    @property
    def projective_dimension(self) -> int:
        return len(self.betti) - 1

    def graded(self) -> dict[tuple[int, int], int]:
        """Nonzero graded Betti numbers as {(i, internal degree): count}."""
        return {
            (i, self.m + i): b for i, b in enumerate(self.betti) if b != 0
        }

    def __str__(self) -> str:
        return ", ".join(f"beta_{i} = {b}" for i, b in enumerate(self.betti))


def betti_numbers(hs: HilbertSeriesJ) -> BettiTable:
    """Read Betti numbers off the numerator: p(t) = sum (-1)^i beta_i t^i.

    Raises ValueError when the coefficients fail to alternate in sign or are
    not integers; either signals invalid input, since the resolution forces
    alternation.
    """
    p = hs.p
    values = []
    for i, c in enumerate(p.coeffs):
        signed = c if i % 2 == 0 else -c
        if signed < 0 or signed.denominator != 1:
            raise ValueError(
                f"coefficient {c} of t^{i} breaks the alternating sign pattern"
            )
        values.append(int(signed))
    return BettiTable(values, hs.m)


def transversal_series(codims: Sequence[int], n: int) -> RationalFunction:
    """The closed-form series prod(1-(1-t)^{c_i}) / (1-t)^n.

    For a transversal arrangement this differs from the series of both the
    product ideal and the intersection ideal by polynomials.
    """
    if any(c < 1 or c > n for c in codims):
        raise ValueError("codimensions must lie in 1..n")
    numerator = ONE
    for c in codims:
        numerator = numerator * (ONE - one_minus_t_pow(c))
    return numerator, n


def _as_rational(x: Union[HilbertSeriesJ, RationalFunction]) -> RationalFunction:
    if isinstance(x, HilbertSeriesJ):
        return x.numerator, x.n
    numerator, power = x
    return numerator, power


def is_series_difference_polynomial(
    a: Union[HilbertSeriesJ, RationalFunction],
    b: Union[HilbertSeriesJ, RationalFunction],
) -> bool:
    """True iff the two series differ by a polynomial.

    Both series must be given over the same power of (1-t); the difference is
    a polynomial exactly when (1-t)^power divides the numerator difference.
    """
    num_a, power_a = _as_rational(a)
    num_b, power_b = _as_rational(b)
    if power_a != power_b:
        raise ValueError("series must share a common denominator power")
    return not poly_mod_one_minus_t_pow(num_a - num_b, power_a)


def transversal_hilbert_function(codims: Sequence[int], n: int, d: int) -> int:
    """Alternating binomial sum for the graded dimension in degree d.

    Sums (-1)^|S| C(d+n-1-c_S, n-1-c_S) over subsets S (empty set included)
    whose total codimension c_S = sum of c_i stays below n.  For a
    transversal arrangement this equals dim J_d = dim I_d whenever d >= m.
    """
    m = len(codims)
    total = 0
    for mask in range(1 << m):
        c = sum(codims[i] for i in range(m) if mask >> i & 1)
        if c >= n:
            continue
        term = binom(d + n - 1 - c, n - 1 - c)
        total += -term if mask.bit_count() % 2 else term
    return total


@dataclass(frozen=True)
class HilbertPolynomial:
    """Polynomial in d matching the series coefficients for large d."""

    coeffs: QPoly

    @property
    def degree(self) -> int:
        return self.coeffs.degree

    def __call__(self, d: Union[int, Fraction]) -> Fraction:
        return self.coeffs.evaluate(d)

    def to_str(self, var: str = "d") -> str:
        return self.coeffs.to_str(var)

    def __str__(self) -> str:
        return self.to_str()


def shifted_binomial_polynomial(n: int, shift: int) -> QPoly:
    """The degree-(n-1) polynomial in d whose value is C(d-shift+n-1, n-1).

    The binomial identity holds for all integers d with d - shift >= 0; as
    polynomials these form a basis (over shifts 0..n-1) of degree < n.
    """
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    poly = ONE
    for k in range(1, n):
        poly = poly * QPoly.of(k - shift, 1)
    return poly * Fraction(1, math.factorial(n - 1))


def hilbert_polynomial_from_numerator(numerator: QPoly, n: int) -> HilbertPolynomial:
    """Hilbert polynomial of a series numerator/(1-t)^n.

    Expands the series coefficient at degree d as a sum of shifted binomial
    polynomials, one per numerator term.
    """
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    total = ZERO
    for j, coeff in enumerate(numerator.coeffs):
        if coeff:
            total = total + shifted_binomial_polynomial(n, j) * coeff
    return HilbertPolynomial(total)

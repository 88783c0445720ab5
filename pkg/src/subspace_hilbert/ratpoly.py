"""Exact univariate polynomials and truncated power series over the rationals.

A polynomial is a dense list of ``fractions.Fraction`` coefficients indexed by
degree, kept in canonical form (no trailing zero coefficient, so the zero
polynomial has an empty coefficient tuple).  A series is a fixed-length prefix
of a power series: coefficients of t^0 .. t^order.  All arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


def _canonical(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class QPoly:
    """Dense polynomial in one variable with rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _canonical(coeffs))

    @classmethod
    def of(cls, *coeffs: Scalar) -> "QPoly":
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: Union["QPoly", Scalar]) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            return QPoly(c * other for c in self.coeffs)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        quot = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + other.degree] / lead
            if c:
                quot[i] = c
                for j, d in enumerate(other.coeffs):
                    rem[i + j] -= c * d
        return QPoly(quot), QPoly(rem)

    def __mod__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[0]

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Divide by an exact factor; raise if a nonzero remainder is left."""
        quot, rem = divmod(self, other)
        if rem:
            raise ValueError(f"{self} is not divisible by {other}")
        return quot

    def shift(self, k: int) -> "QPoly":
        """Multiply by t^k."""
        if not self:
            return self
        return QPoly((Fraction(0),) * k + self.coeffs)

    def evaluate(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_str(self, var: str = "t") -> str:
        """Render in ascending degree with explicit signs, e.g. ``-2 + 6t - 3t^2``."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                t = var if i == 1 else f"{var}^{i}"
                body = t if mag == 1 else f"{mag}{t}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"QPoly({self.to_str()!r})"


ZERO = QPoly()
ONE = QPoly.of(1)
T = QPoly.of(0, 1)
ONE_MINUS_T = ONE - T


def one_minus_t_pow(k: int) -> QPoly:
    """(1-t)^k."""
    if k < 0:
        raise ValueError("negative power")
    return ONE_MINUS_T**k


@dataclass(frozen=True)
class QSeries:
    """Power series truncated to a fixed order: coefficients of t^0 .. t^order."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar]):
        out = tuple(Fraction(c) for c in coeffs)
        if not out:
            raise ValueError("a series needs at least the t^0 coefficient")
        object.__setattr__(self, "coeffs", out)

    @classmethod
    def from_poly(cls, p: QPoly, order: int) -> "QSeries":
        return cls(p.coeff(d) for d in range(order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, d: int) -> Fraction:
        if not 0 <= d <= self.order:
            raise IndexError(f"degree {d} outside truncation order {self.order}")
        return self.coeffs[d]

    def _check_order(self, other: "QSeries") -> None:
        if self.order != other.order:
            raise ValueError("series truncation orders differ")

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check_order(other)
        return QSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "QSeries") -> "QSeries":
        self._check_order(other)
        return QSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other: "QSeries") -> "QSeries":
        self._check_order(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j in range(self.order + 1 - i):
                    out[i + j] += c * other.coeffs[j]
        return QSeries(out)

    def __str__(self) -> str:
        return QPoly(self.coeffs).to_str() + f" + O(t^{self.order + 1})"


def binom(a: int, b: int) -> int:
    """C(a, b), taken to be 0 when a < 0, b < 0, or a < b."""
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


def poly_mod_one_minus_t_pow(p: QPoly, k: int) -> QPoly:
    """Remainder of p under division by (1-t)^k; the unique representative of
    degree < k."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return ZERO
    return p % one_minus_t_pow(k)


def inverse_of_t_mod(k: int) -> QPoly:
    """The degree-<k polynomial q with t*q = 1 mod (1-t)^k.

    t is a unit modulo (1-t)^k, with inverse sum_{j<k} (1-t)^j: writing
    u = 1-t, the product t*q telescopes to 1 - u^k.
    """
    if k < 1:
        raise ValueError("t is not invertible mod (1-t)^0")
    acc = ZERO
    power = ONE
    for _ in range(k):
        acc = acc + power
        power = power * ONE_MINUS_T
    return acc


def expand_rational(numerator: QPoly, denom_power: int, order: int) -> QSeries:
    """Series coefficients of numerator(t) / (1-t)^denom_power through t^order.

    The coefficient of t^d equals sum_j numerator_j * C(d-j+n-1, n-1) for
    n = denom_power >= 1 (with the ``binom`` zero conventions); multiplying by
    1/(1-t) is a running prefix sum, applied n times.
    """
    if denom_power < 0:
        raise ValueError("negative denominator power")
    if order < 0:
        raise ValueError("negative truncation order")
    coeffs = [numerator.coeff(d) for d in range(order + 1)]
    for _ in range(denom_power):
        acc = Fraction(0)
        for d in range(order + 1):
            acc += coeffs[d]
            coeffs[d] = acc
    return QSeries(coeffs)


def substitute_one_minus_t(p: QPoly) -> QPoly:
    """p(1-t), expanded.  Applying it twice gives back p."""
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * ONE_MINUS_T + QPoly.of(c)
    return acc


def series_divide(a: QSeries, b: QSeries) -> QSeries:
    """Truncated quotient q with q*b = a through the common order."""
    a._check_order(b)
    if b.coeffs[0] == 0:
        raise ValueError("series divisor has zero constant term")
    out = [Fraction(0)] * (a.order + 1)
    for d in range(a.order + 1):
        acc = a.coeffs[d]
        for j in range(d):
            acc -= out[j] * b.coeffs[d - j]
        out[d] = acc / b.coeffs[0]
    return QSeries(out)


def fit_numerator(values: Sequence[Scalar], denom_power: int) -> QPoly:
    """Numerator of a rational function with denominator (1-t)^denom_power
    whose series starts with the given coefficients.

    Exact only when the true numerator degree is at most len(values)-1; the
    result is the product of the value series with (1-t)^denom_power,
    truncated at that degree.
    """
    prod = QPoly(values) * one_minus_t_pow(denom_power)
    return QPoly(prod.coeffs[: len(values)])

"""Recovering subspace codimensions from Hilbert-function data.

Two halves.  First, estimating graded dimensions from sample points: the
space of degree-d forms vanishing on a point set has dimension C(d+n-1, n-1)
minus the rank of the evaluation matrix, and with enough generic points per
subspace this reproduces the arrangement's own graded dimensions.  Second,
exact recovery: given the values of the Hilbert polynomial at the n
consecutive degrees m..m+n-1 for a transversal arrangement, interpolation
plus binomial-basis bookkeeping yields the multiset of codimensions.

Codimension-n components (the zero subspace) are invisible to recovery: they
contribute a factor congruent to 1, so they surface only through the final
consistency check that the multiplicities account for all m subspaces.
Transversality itself is an assumption, not something this module verifies;
inconsistent inputs are flagged whenever a check fails, but a non-transversal
source can evade detection.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .arrangement import Arrangement
from .linalg import IntEchelon, QMatrix, approx_rank, primitive_int_vector, rref
from .oracle import monomial_basis
from .ratpoly import (
    ONE,
    QPoly,
    QSeries,
    poly_mod_one_minus_t_pow,
    series_divide,
    substitute_one_minus_t,
)
from .hilbert import shifted_binomial_polynomial

Number = Union[int, float, Fraction]


class InconsistentDataError(ValueError):
    """Hilbert values incompatible with a transversal arrangement of m subspaces."""


@dataclass(frozen=True)
class PointCloud:
    """Sample points spanning rays inside an arrangement.

    Entries are exact rationals unless any coordinate is a float, in which
    case the whole cloud switches to approximate mode.
    """

    ambient_dim: int
    points: tuple[tuple, ...]
    exact: bool

    def __init__(self, ambient_dim: int, points: Iterable[Sequence[Number]]):
        pts = [tuple(p) for p in points]
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        exact = all(
            not isinstance(x, float) for p in pts for x in p
        )
        out = []
        for p in pts:
            if len(p) != ambient_dim:
                raise ValueError("point length does not match ambient dimension")
            if all(x == 0 for x in p):
                raise ValueError("zero vectors span no ray; drop them from the cloud")
            if exact:
                out.append(tuple(Fraction(x) for x in p))
            else:
                out.append(tuple(float(x) for x in p))
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "points", tuple(out))
        object.__setattr__(self, "exact", exact)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class RecoveryResult:
    """Recovered codimension data for an arrangement of m subspaces.

    multiplicities[i-1] counts subspaces of codimension i (i = 1..n-1);
    codims is the sorted expansion of that multiset.
    """

    ambient_dim: int
    multiplicities: tuple[int, ...]
    codims: tuple[int, ...]

    def __init__(self, ambient_dim: int, multiplicities: Sequence[int]):
        multiplicities = tuple(int(r) for r in multiplicities)
        if len(multiplicities) != ambient_dim - 1:
            raise ValueError("need one multiplicity per codimension 1..n-1")
        if any(r < 0 for r in multiplicities):
            raise ValueError("multiplicities must be nonnegative")
        codims = tuple(
            c for c, r in enumerate(multiplicities, start=1) for _ in range(r)
        )
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "multiplicities", multiplicities)
        object.__setattr__(self, "codims", codims)

    @property
    def dims(self) -> tuple[int, ...]:
        """Subspace dimensions n - c, sorted ascending."""
        return tuple(sorted(self.ambient_dim - c for c in self.codims))


def estimate_hilbert_value(pc: PointCloud, d: int, tol: float | None = None) -> int:
    """Dimension of the degree-d forms vanishing on every point of the cloud.

    Builds the evaluation matrix (one row per point, one column per degree-d
    monomial) and returns C(d+n-1, n-1) minus its rank.  Exact clouds use
    exact integer elimination; float clouds (or an explicit tol) use
    tolerance-based elimination, defaulting to a relative 1e-8.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n = pc.ambient_dim
    basis = monomial_basis(n, d)
    total = len(basis)
    if not pc.points:
        return total
    if pc.exact and tol is None:
        ech = IntEchelon(total)
        for p in pc.points:
            powers = [[Fraction(1)] * (d + 1) for _ in range(n)]
            for j in range(n):
                for e in range(1, d + 1):
                    powers[j][e] = powers[j][e - 1] * p[j]
            row = [Fraction(1)] * total
            for idx, exps in enumerate(basis.monomials):
                v = Fraction(1)
                for j, e in enumerate(exps):
                    if e:
                        v *= powers[j][e]
                row[idx] = v
            ech.add(primitive_int_vector(row))
            if ech.full:
                break
        return total - ech.rank
    matrix = []
    for p in pc.points:
        coords = [float(x) for x in p]
        row = []
        for exps in basis.monomials:
            v = 1.0
            for j, e in enumerate(exps):
                if e:
                    v *= coords[j] ** e
            row.append(v)
        matrix.append(row)
    return total - approx_rank(matrix, rel_tol=1e-8 if tol is None else tol)


def interpolate_polynomial(values: Sequence[Union[int, Fraction]], start: int) -> QPoly:
    """The unique polynomial of degree < len(values) through
    (start, values[0]), (start+1, values[1]), ...; exact Lagrange form."""
    if not values:
        raise ValueError("need at least one value")
    total = QPoly.of()
    xs = [start + r for r in range(len(values))]
    for r, y in enumerate(values):
        if y == 0:
            continue
        term = ONE
        denom = 1
        for s, x in enumerate(xs):
            if s != r:
                term = term * QPoly.of(-x, 1)
                denom *= xs[r] - x
        total = total + term * Fraction(y, denom)
    return total


def binomial_basis_coefficients(h: QPoly, n: int) -> QPoly:
    """Write h (a polynomial in d, degree < n) as sum a_j C(d+n-1-j, n-1).

    Returns a(t) = sum a_j t^j.  The n shifted binomial polynomials form a
    basis of the degree-< n polynomials, so the square system is solvable
    exactly and uniquely.
    """
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    if h.degree >= n:
        raise ValueError("polynomial degree must stay below the ambient dimension")
    columns = [shifted_binomial_polynomial(n, j) for j in range(n)]
    augmented = QMatrix(
        [
            [columns[j].coeff(deg) for j in range(n)] + [h.coeff(deg)]
            for deg in range(n)
        ],
        ncols=n + 1,
    )
    reduced, pivots = rref(augmented)
    if pivots != tuple(range(n)):
        raise ArithmeticError("shifted binomial polynomials failed to form a basis")
    return QPoly([reduced.entries[j][n] for j in range(n)])


def recover_codimensions(
    values: Sequence[Union[int, Fraction]], m: int, n: int
) -> RecoveryResult:
    """Recover the codimension multiset from n Hilbert-polynomial values.

    values[r] must be the Hilbert function of the arrangement's vanishing
    ideal at degree m+r, for r = 0..n-1, with the arrangement transversal and
    m the number of subspaces.  Pipeline: interpolate the degree-< n
    polynomial, rewrite it in the shifted binomial basis as a(t), reduce to
    b(t) = a(t) mod (1-t)^n, expand b(1-t) as a series mod t^n (congruent to
    the product of (1-t^{c_i})), and peel off each codimension's multiplicity
    by successive exact series division.

    Raises InconsistentDataError when any step contradicts that model:
    non-integer basis coefficients, constant term != 1, a negative or
    fractional multiplicity, or multiplicities that fail to account for all m
    subspaces (codimension-n components are invisible and surface here).
    """
    if n < 1:
        raise ValueError("ambient dimension must be at least 1")
    if m < 1:
        raise ValueError("the arrangement must have at least one subspace")
    if len(values) != n:
        raise ValueError(f"need exactly {n} values at degrees {m}..{m + n - 1}")
    h = interpolate_polynomial(values, m)
    a = binomial_basis_coefficients(h, n)
    if any(c.denominator != 1 for c in a.coeffs):
        raise InconsistentDataError(
            f"binomial-basis coefficients {a.coeffs} are not integers"
        )
    b = poly_mod_one_minus_t_pow(a, n)
    product = QSeries.from_poly(substitute_one_minus_t(b), n - 1)
    if product.coeff(0) != 1:
        raise InconsistentDataError(
            "series constant term is not 1; values do not come from a "
            "transversal arrangement with this m"
        )
    multiplicities = []
    running = product
    for c in range(1, n):
        r_c = -running.coeff(c)
        if r_c.denominator != 1 or r_c < 0:
            raise InconsistentDataError(
                f"multiplicity for codimension {c} came out as {r_c}"
            )
        r_c = int(r_c)
        multiplicities.append(r_c)
        if r_c:
            factor = (ONE - QPoly((0,) * c + (1,))) ** r_c
            running = series_divide(running, QSeries.from_poly(factor, n - 1))
    if sum(multiplicities) != m:
        raise InconsistentDataError(
            f"recovered {sum(multiplicities)} subspaces out of {m}; "
            "codimension-n components are invisible to this recovery"
        )
    return RecoveryResult(n, multiplicities)


def end_to_end_recover(
    pc: PointCloud, m: int, tol: float | None = None
) -> RecoveryResult:
    """Estimate Hilbert values from points, then recover codimensions.

    The cloud must be nonempty; its ambient dimension supplies n, and the
    values at degrees m..m+n-1 feed recover_codimensions.
    """
    if not pc.points:
        raise ValueError("cannot recover from an empty point cloud")
    n = pc.ambient_dim
    values = [estimate_hilbert_value(pc, d, tol) for d in range(m, m + n)]
    return recover_codimensions(values, m, n)


def sample_points(a: Arrangement, per_subspace: int, seed: int) -> PointCloud:
    """Deterministic rational sample points drawn from each subspace.

    Each point is a random small-integer combination of the subspace's basis
    vectors; zero combinations are redrawn.  Genericity is empirical: enough
    samples per subspace make the vanishing-space estimates match the true
    graded dimensions for small degrees.
    """
    if per_subspace < 1:
        raise ValueError("need at least one point per subspace")
    rng = random.Random(seed)
    points = []
    for s in a.subspaces:
        if s.dim == 0:
            raise ValueError(
                "the zero subspace contributes no nonzero sample points"
            )
        for _ in range(per_subspace):
            while True:
                coeffs = [rng.randint(-9, 9) for _ in range(s.dim)]
                point = [
                    sum(c * v[j] for c, v in zip(coeffs, s.vectors))
                    for j in range(a.ambient_dim)
                ]
                if any(x != 0 for x in point):
                    break
            points.append(point)
    return PointCloud(a.ambient_dim, points)

"""Finite unions of linear subspaces and their intersection dimensions.

An arrangement is an ordered tuple of proper subspaces of K^n.  The
combinatorial data consumed elsewhere is its dimension function: the map
sending every subset S of indices to dim of the intersection of the chosen
subspaces.  Subsets are encoded as bitmasks over subspace indices, so the
whole function is a table of length 2^m.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import QMatrix, SubspaceBasis, intersect, rank

_SUBSET_CAP_ENV = "SUBSPACE_HILBERT_SUBSET_CAP"
_DEFAULT_SUBSET_CAP = 16


def subset_cap() -> int:
    """Maximum number of subspaces; the subset lattice has 2^m nodes."""
    return int(os.environ.get(_SUBSET_CAP_ENV, _DEFAULT_SUBSET_CAP))


@dataclass(frozen=True)
class Arrangement:
    """An ordered union of proper linear subspaces of a common K^n."""

    ambient_dim: int
    subspaces: tuple[SubspaceBasis, ...]

    def __init__(self, ambient_dim: int, subspaces: Iterable[SubspaceBasis]):
        subspaces = tuple(subspaces)
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be at least 1")
        if not subspaces:
            raise ValueError("an arrangement needs at least one subspace")
        cap = subset_cap()
        if len(subspaces) > cap:
            raise ValueError(
                f"{len(subspaces)} subspaces exceeds the subset cap of {cap}"
            )
        for s in subspaces:
            if s.ambient_dim != ambient_dim:
                raise ValueError("subspace ambient dimension mismatch")
            if s.dim >= ambient_dim:
                raise ValueError("subspaces must be proper (dim < ambient)")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "subspaces", subspaces)

    @property
    def num_subspaces(self) -> int:
        return len(self.subspaces)

    @property
    def singleton_codims(self) -> tuple[int, ...]:
        return tuple(self.ambient_dim - s.dim for s in self.subspaces)


@dataclass(frozen=True)
class DimensionFunction:
    """dim of the subspace intersection for every subset of indices.

    ``dims_by_mask[mask]`` is the dimension of the intersection of the
    subspaces whose index bits are set in ``mask``; mask 0 gives the ambient
    dimension.
    """

    ambient_dim: int
    num_subspaces: int
    dims_by_mask: tuple[int, ...]

    def __init__(self, ambient_dim: int, num_subspaces: int, dims_by_mask: Sequence[int]):
        dims_by_mask = tuple(dims_by_mask)
        if len(dims_by_mask) != 1 << num_subspaces:
            raise ValueError("dimension table length must be 2^num_subspaces")
        if dims_by_mask[0] != ambient_dim:
            raise ValueError("the empty intersection must have the ambient dimension")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "num_subspaces", num_subspaces)
        object.__setattr__(self, "dims_by_mask", dims_by_mask)

    @classmethod
    def transversal(cls, ambient_dim: int, codims: Sequence[int]) -> "DimensionFunction":
        """The dimension function a transversal arrangement with the given
        singleton codimensions must have."""
        m = len(codims)
        if any(c < 1 or c > ambient_dim for c in codims):
            raise ValueError("codimensions must lie in 1..ambient_dim")
        table = []
        for mask in range(1 << m):
            total = sum(codims[i] for i in range(m) if mask >> i & 1)
            table.append(ambient_dim - min(ambient_dim, total))
        return cls(ambient_dim, m, table)

    def dim_of(self, mask: int) -> int:
        return self.dims_by_mask[mask]

    def codim_of(self, mask: int) -> int:
        return self.ambient_dim - self.dims_by_mask[mask]

    @property
    def singleton_codims(self) -> tuple[int, ...]:
        return tuple(self.codim_of(1 << i) for i in range(self.num_subspaces))


def dimension_function(arr: Arrangement) -> DimensionFunction:
    """Compute the full dimension function of an arrangement.

    Intersections are built incrementally over the subset lattice: each mask
    reuses the intersection for the mask with its lowest bit cleared.
    """
    n = arr.ambient_dim
    m = arr.num_subspaces
    full = SubspaceBasis.span_of(n, QMatrix.identity(n).entries)
    spaces: list[SubspaceBasis] = [full] * (1 << m)
    dims = [n] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if rest == 0:
            spaces[mask] = arr.subspaces[low]
        else:
            spaces[mask] = intersect(spaces[rest], arr.subspaces[low])
        dims[mask] = spaces[mask].dim
    return DimensionFunction(n, m, dims)


def is_transversal(df: DimensionFunction) -> bool:
    """True when every subset codimension is min(n, sum of singleton codims)."""
    n = df.ambient_dim
    codims = df.singleton_codims
    for mask in range(1 << df.num_subspaces):
        total = sum(codims[i] for i in range(df.num_subspaces) if mask >> i & 1)
        if df.codim_of(mask) != min(n, total):
            return False
    return True


def random_arrangement(
    ambient_dim: int, dims: Sequence[int], seed: int
) -> Arrangement:
    """Deterministic pseudo-random arrangement with prescribed dimensions.

    Bases use small integer entries so downstream exact arithmetic stays
    cheap.  dims entries may be 0 (the zero subspace) but must be proper.
    """
    rng = random.Random(seed)
    subspaces = []
    for d in dims:
        if d < 0 or d >= ambient_dim:
            raise ValueError("subspace dimensions must lie in 0..ambient_dim-1")
        if d == 0:
            subspaces.append(SubspaceBasis(ambient_dim))
            continue
        for _ in range(64):
            rows = [
                [rng.randint(-3, 3) for _ in range(ambient_dim)] for _ in range(d)
            ]
            if rank(QMatrix(rows, ncols=ambient_dim)) == d:
                subspaces.append(SubspaceBasis(ambient_dim, rows))
                break
        else:
            raise RuntimeError("failed to sample an independent basis")
    return Arrangement(ambient_dim, subspaces)

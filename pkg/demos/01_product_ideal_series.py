## Walkthrough: from an arrangement to its product-ideal Hilbert series.
##
## The running example is the union of the three coordinate axes in Q^3.
## Everything below is exact rational arithmetic; the closing section
## cross-checks the closed form against a brute-force linear-algebra oracle.

from subspace_hilbert import (
    Arrangement,
    SubspaceBasis,
    betti_numbers,
    compute_ps_family,
    dimension_function,
    hilbert_series_J,
    hilbert_table,
    is_transversal,
)

## Build the arrangement: three lines spanned by the standard basis vectors.

axes = Arrangement(
    3,
    [
        SubspaceBasis(3, [[1, 0, 0]]),
        SubspaceBasis(3, [[0, 1, 0]]),
        SubspaceBasis(3, [[0, 0, 1]]),
    ],
)
print("ambient dimension:", axes.ambient_dim)
print("subspace dimensions:", [s.dim for s in axes.subspaces])

## The dimension function records dim of the intersection for every subset
## of the subspaces (subsets are bitmasks; mask 0 is the empty intersection).

df = dimension_function(axes)
for mask in range(1, 1 << axes.num_subspaces):
    members = [i + 1 for i in range(axes.num_subspaces) if mask >> i & 1]
    print(f"  subset {members}: dim {df.dim_of(mask)}, codim {df.codim_of(mask)}")
print("transversal:", is_transversal(df))

## The closed form works through a family of polynomials p_S(t), one per
## subset, each solving a congruence modulo (1 - t)^codim(S).  The full-set
## polynomial is the series numerator up to a shift by t^m.

family = compute_ps_family(df)
print("p for a single line:   ", family.p(0b001))
print("p for a pair of lines: ", family.p(0b011))
print("p for all three lines: ", family.top)

## Assemble the series H(J, t) = t^m p(t) / (1 - t)^n and read off the
## graded pieces.  The coefficient of t^d is dim J_d.

hs = hilbert_series_J(df)
print("H(J, t) =", hs)
print("dim J_d for d = 0..8:", list(hs.table(8)))

## Because the product ideal has a linear resolution, the Betti numbers of
## that resolution are (up to sign) the coefficients of p.

betti = betti_numbers(hs)
print("Betti numbers:", betti)
print("graded table {(i, j): count}:", betti.graded())
print("projective dimension:", betti.projective_dimension)

## The Hilbert polynomial agrees with the coefficients from degree m on.

hp = hs.hilbert_polynomial()
print("Hilbert polynomial:", hp.to_str("d"))
print("values at d = 3..8:", [hp(d) for d in range(3, 9)])

## Independent check: the oracle builds the actual graded pieces of both
## ideals with exact row reduction and reports their dimensions.

print("oracle table (d, dim I_d, dim J_d):")
for row in hilbert_table(axes, 6):
    print(f"  {row.degree}: {row.dim_I}, {row.dim_J}")
series_values = list(hs.table(6))
oracle_values = [row.dim_J for row in hilbert_table(axes, 6)]
print("closed form matches the oracle:", series_values == oracle_values)

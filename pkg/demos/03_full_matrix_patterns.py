"""
Pairing patterns, tensor factorizations, and complementation
============================================================

k pairs of order-p generators, each pair commuting up to exp(2*pi*i/p)
and everything else commuting, generate the full matrix algebra of size
p^k: trivial center, dimension p^(2k), and the pairs split off as tensor
factors.

Adding one extra "star" generator that pairs nontrivially with the
0-member of every pair changes the structural picture: a subalgebra that
omits one pair is no longer complemented, because the star ties the
omitted pair's 0-member to the kept generators.
"""

from ccralg import (
    center_basis,
    complementation_contrast,
    is_complemented,
    is_full_matrix,
    nonuniqueness_fragment,
    pairing_triple,
    tensor_split,
    validate_triple,
)

for k, p in [(1, 2), (2, 2), (2, 3)]:
    pt = pairing_triple(k, p)
    full, n = is_full_matrix(pt.triple)
    print(f"pairing k={k} p={p}: dim {pt.triple.dimension()}, full matrix of size {n}")

# pairs split off as tensor factors
pt = pairing_triple(2, 2)
left, right = tensor_split(pt.triple, [0, 1])
print("\nsplit 2 pairs:", left.dimension(), "x", right.dimension(),
      "=", pt.triple.dimension())

# dropping one pair of a pure pairing pattern keeps it complemented: the
# dropped pair IS the centralizer of the rest
print("pure pairing, one pair kept out:",
      "complemented" if is_complemented(pt.triple, [0, 1]) else "not complemented")

# the star fragment: a small matrix core, three order-2 pairs, one star
frag = nonuniqueness_fragment([(3, 1)], p=2, m=2)
print("\nfragment:", frag.triple.spec.labels)
# The whole fragment is not a matrix algebra: the star times all the
# 1-members centralizes everything, giving a 2-element center.  The
# distinguished subalgebras (audited in substitute_and_verify) are the
# full matrix pieces.
print("valid:", validate_triple(frag.triple).ok,
      "| dim:", frag.triple.dimension(),
      "| center size:", len(center_basis(frag.triple)))

report = complementation_contrast(frag, pairing_triple(3, 2), omit_pair=1)
fs, ps = report.fragment_side, report.pairing_side
print("\nwith pair 1 omitted:")
print("  fragment side:  complemented =", fs.complemented,
      "| missing:", fs.missing_witness,
      "| centralizer sample:", list(fs.centralizer_sample))
print("  pairing side:   complemented =", ps.complemented,
      "| centralizer size:", ps.centralizer_size)
print("  contrast established:", report.contrast())

"""
Conditional expectations, compressions, and induced maps
========================================================

Restricting an element's coefficients to a subgroup is the canonical
trace-compatible projection onto the corresponding subalgebra.  In the
regular representation the same map is compression by the subspace
projection -- both computed exactly here.

Pairing-preserving injective group maps induce *-homomorphisms sending
basis unitaries to (phase times) basis unitaries.  The phase is the cost
of re-normal-ordering in the target; it is trivial for order-preserving
generator maps.  One genuine subtlety is audited at the end: preserving
the pairing does NOT always make the basis-level lift exist.
"""

from ccralg import (
    AlgebraElement,
    CCRMorphism,
    GroupSpec,
    MorphismLiftError,
    Phase,
    compress,
    conditional_expectation,
    induced_hom,
    lift_defects,
    make_triple,
    multiply,
    regular_rep,
    reordering_phase,
    subgroup_generated,
)

t = make_triple(GroupSpec.of([("a", 2), ("b", 2)]), [(0, 1, Phase.minus_one())])
spec = t.spec
u = lambda exps: AlgebraElement.monomial(t, spec.element(exps))

# expectation onto the subalgebra of the subgroup generated by a
sub = subgroup_generated(spec, [spec.generator(0)])
x = u([0, 0]) + u([1, 0]) + u([0, 1]) + u([1, 1])
print("x            =", x)
print("E(x)         =", conditional_expectation(x, sub))

# the same map as a compression in the regular representation
r = regular_rep(t)
print("\ncompress(x) == compress(E(x)):",
      compress(r, sub, x) == compress(r, sub, conditional_expectation(x, sub)))
print("compress(u_b) is the zero matrix:",
      not compress(r, sub, u([0, 1])).entries)

# the generator swap a <-> b preserves the pairing (-1 is self-conjugate)
swap = CCRMorphism(t, t, (spec.generator(1), spec.generator(0)))
print("\nswap checks out:", swap.check().ok)
print("swap sends u_ab to", induced_hom(swap, u([1, 1])))
print("re-normal-ordering phase on ab:", reordering_phase(swap, spec.element([1, 1])))
print("multiplicative on a sample:",
      induced_hom(swap, multiply(u([1, 0]), u([0, 1])))
      == multiply(induced_hom(swap, u([1, 0])), induced_hom(swap, u([0, 1]))))

# the audited subtlety: map an order-2 generator onto the diagonal ab.
# The pairing is preserved and the map is injective, yet (u_a u_b)^2 = -1,
# so no *-homomorphism can send the new generator's unitary to u_a u_b.
src = make_triple(GroupSpec.of([("x", 2)]), [])
diag = CCRMorphism(src, t, (spec.element([1, 1]),))
print("\ndiagonal map checks out:", diag.check().ok)
print("lift defects:", [(i, str(p)) for i, p in lift_defects(diag)])
try:
    induced_hom(diag, AlgebraElement.monomial(src, src.spec.generator(0)))
except MorphismLiftError as exc:
    print("induced_hom refuses:", exc)

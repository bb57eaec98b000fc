"""
Twisted group algebra basics
============================

Build the smallest interesting commutation pattern -- two order-2
generators with u_a u_b = - u_b u_a -- and poke at the algebra it spans:
normal-ordered products, the adjoint's hidden phase, the trace, and the
orthonormal monomial basis.
"""

from fractions import Fraction

from ccralg import (
    AlgebraElement,
    GroupSpec,
    Phase,
    adjoint,
    l2_inner,
    make_triple,
    multiply,
    normal_order_cocycle,
    trace,
    validate_triple,
)

# Two generators a < b of order 2; the only free commutation phase is
# theta(a, b), here -1 (written as the rational 1/2: exp(2*pi*i * 1/2)).
spec = GroupSpec.of([("a", 2), ("b", 2)])
t = make_triple(spec, [(0, 1, Phase.minus_one())])
print("valid:", validate_triple(t).ok)
print("algebra dimension = group order =", t.dimension())

a, b = spec.generator(0), spec.generator(1)
ab = spec.element([1, 1])
u = lambda g: AlgebraElement.monomial(t, g)

# The basis monomial u_ab means "u_a u_b" (generators in their fixed order).
# Multiplying two monomials picks up the normal-ordering phase:
print("\nu_ab * u_a =", multiply(u(ab), u(a)))
print("cocycle c(ab, a) =", normal_order_cocycle(t, ab, a))

# u_ab is NOT self-inverse on the nose: its square is -1.
print("u_ab^2 =", multiply(u(ab), u(ab)))

# The adjoint therefore carries a compensating phase ...
print("adjoint(u_ab) =", adjoint(u(ab)))
# ... which is exactly what keeps every basis monomial unitary:
print("u_ab* u_ab =", multiply(adjoint(u(ab)), u(ab)))

# The trace reads off the identity coefficient.  It is faithful:
x = u(a) + u(b).scaled(2)
print("\nx =", x)
print("trace(x) =", trace(x))
print("trace(x* x) =", trace(multiply(adjoint(x), x)), "(= 1^2 + 2^2)")

# And the monomials are orthonormal for <y, z> = trace(z* y):
print("\nGram matrix of the four basis monomials:")
elems = list(spec.elements())
for g in elems:
    row = [str(l2_inner(u(g), u(h))) for h in elems]
    print("  ", row)

# Coefficients live in cyclotomic fields, exactly:
z3 = Phase(Fraction(1, 3))
y = u(a).scaled(Fraction(1, 2)) + u(ab).scaled(z3)
print("\ny =", y)
print("trace(y* y) =", trace(multiply(adjoint(y), y)), "(exactly 5/4)")

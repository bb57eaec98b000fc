"""The finite-dimensional *-algebra spanned by normal-ordered unitaries u_g.

Basis monomials are indexed by group elements; u_g abbreviates the product
of generator powers taken in the fixed generator order.  Multiplication is
the bilinear extension of

    u_g * u_h = c(g, h) * u_{g h},

where the normal-ordering 2-cocycle c collects the phases picked up while
sorting the concatenated word back into generator order:

    c(g, h) = prod_{i > j} theta[i][j] ** (m_g(i) * m_h(j)).

Exponent reduction past a generator's order contributes no phase, because
the generator's unitary has exactly that order.

A warning about a tempting simplification: u_g * u_{g^-1} is NOT always
u_e.  In the 2x2 clock/shift triple, (u_a u_b)^2 = -u_e.  The adjoint
therefore carries an explicit phase, adjoint(u_g) = conj(c(g, g^-1)) *
u_{g^-1}.  Everything downstream (traciality, faithfulness, orthonormality
of the basis) still holds because c(g, g^-1) = c(g^-1, g), which follows
from the extended pairing being 1 on (g, g).
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Mapping, Sequence, Union

from .cyclotomic import Cyclotomic, Phase, ScalarLike
from .errors import (
    MorphismError,
    MorphismLiftError,
    SpecMismatchError,
    TensorSplitRefusal,
)
from .groups import DEFAULT_ENUMERATION_CAP, GroupElement, GroupSpec, Subgroup
from .triples import CCRMorphism, CCRTriple


def normal_order_cocycle(t: CCRTriple, g: GroupElement, h: GroupElement) -> Phase:
    """c(g, h) with u_g u_h = c(g, h) u_{gh}."""
    t._check_elem(g)
    t._check_elem(h)
    return Phase(t._pairing_exponent(g.exponents, h.exponents, lower_only=True))


class AlgebraElement:
    """Sparse element sum_g coeff_g * u_g of the twisted group algebra."""

    __slots__ = ("triple", "terms")

    def __init__(
        self, triple: CCRTriple, terms: Mapping[GroupElement, Cyclotomic]
    ) -> None:
        self.triple = triple
        self.terms = {g: c for g, c in terms.items() if not c.is_zero()}

    # -- constructors --

    @classmethod
    def zero(cls, t: CCRTriple) -> "AlgebraElement":
        return cls(t, {})

    @classmethod
    def monomial(
        cls, t: CCRTriple, g: GroupElement, coeff: ScalarLike = 1
    ) -> "AlgebraElement":
        t._check_elem(g)
        return cls(t, {g: Cyclotomic.coerce(coeff)})

    @classmethod
    def one(cls, t: CCRTriple) -> "AlgebraElement":
        return cls.monomial(t, t.spec.identity())

    # -- linear structure --

    def _check(self, other: "AlgebraElement") -> None:
        if self.triple is not other.triple and self.triple != other.triple:
            raise SpecMismatchError("elements of different triples")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms[g] + c if g in terms else c
        return AlgebraElement(self.triple, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.triple, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scaled(self, s: ScalarLike) -> "AlgebraElement":
        s = Cyclotomic.coerce(s)
        return AlgebraElement(self.triple, {g: c * s for g, c in self.terms.items()})

    def __mul__(
        self, other: Union["AlgebraElement", ScalarLike]
    ) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scaled(other)

    def __rmul__(self, other: ScalarLike) -> "AlgebraElement":
        return self.scaled(other)

    # -- *-algebra structure --

    def adjoint(self) -> "AlgebraElement":
        out: dict[GroupElement, Cyclotomic] = {}
        for g, c in self.terms.items():
            ginv = g.inverse()
            phase = normal_order_cocycle(self.triple, g, ginv).conj()
            out[ginv] = c.conj() * Cyclotomic.from_phase(phase)
        return AlgebraElement(self.triple, out)

    def trace(self) -> Cyclotomic:
        e = self.triple.spec.identity()
        return self.terms.get(e, Cyclotomic.zero())

    def inner(self, other: "AlgebraElement") -> Cyclotomic:
        """<self, other> = trace(other* . self)."""
        return multiply(other.adjoint(), self).trace()

    # -- inspection --

    def coefficient(self, g: GroupElement) -> Cyclotomic:
        return self.terms.get(g, Cyclotomic.zero())

    def support(self) -> list[GroupElement]:
        return sorted(self.terms, key=self.triple.spec.rank)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if self.triple is not other.triple and self.triple != other.triple:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*u{g}" for g, c in sorted(
            self.terms.items(), key=lambda item: self.triple.spec.rank(item[0])
        ))

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    t = a.triple
    out: dict[GroupElement, Cyclotomic] = {}
    for g, cg in a.terms.items():
        for h, ch in b.terms.items():
            phase = normal_order_cocycle(t, g, h)
            coeff = cg * ch
            if not phase.is_one():
                coeff = coeff * Cyclotomic.from_phase(phase)
            key = g * h
            out[key] = out[key] + coeff if key in out else coeff
    return AlgebraElement(t, out)


def adjoint(a: AlgebraElement) -> AlgebraElement:
    return a.adjoint()


def trace(a: AlgebraElement) -> Cyclotomic:
    return a.trace()


def l2_inner(a: AlgebraElement, b: AlgebraElement) -> Cyclotomic:
    return a.inner(b)


def l2_norm_squared(a: AlgebraElement) -> Cyclotomic:
    return a.inner(a)


def conditional_expectation(
    a: AlgebraElement, sub: Union[Subgroup, Iterable[GroupElement]]
) -> AlgebraElement:
    """Kill every coefficient outside the subgroup.

    This coefficient restriction is the trace-compatible projection onto
    the subalgebra spanned by {u_g : g in sub}; against the regular
    representation it is compression by the subspace projection.
    """
    if not isinstance(sub, Subgroup):
        sub = Subgroup.from_members(a.triple.spec, sub)
    if sub.spec != a.triple.spec:
        raise SpecMismatchError("subgroup of a different group")
    return AlgebraElement(
        a.triple, {g: c for g, c in a.terms.items() if g in sub}
    )


def commutant_basis(
    t: CCRTriple,
    gen_indices: Iterable[int],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> list[GroupElement]:
    """Group elements whose monomials span the relative commutant of the
    subalgebra generated by the chosen generators."""
    gens = [t.spec.generator(i) for i in gen_indices]
    return sorted(t.centralizer(gens, cap), key=t.spec.rank)


def center_basis(
    t: CCRTriple, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[GroupElement]:
    return commutant_basis(t, range(t.ngens), cap)


def is_full_matrix(
    t: CCRTriple, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[bool, int | None]:
    """(center is trivial, matrix size n with n*n = dim) -- n only when full.

    A trivial center makes the finite-dimensional algebra a single full
    matrix block, so its dimension must be a perfect square.
    """
    center = center_basis(t, cap)
    if len(center) != 1:
        return (False, None)
    dim = t.dimension()
    n = isqrt(dim)
    if n * n != dim:
        raise ArithmeticError(
            f"trivial center with non-square dimension {dim}; "
            "commutation data is inconsistent"
        )
    return (True, n)


def is_complemented(
    t: CCRTriple,
    gen_indices: Iterable[int],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """Whether the generators' subgroup and its centralizer generate the group."""
    gen_indices = list(gen_indices)
    gamma_s = Subgroup.generated(t.spec, [t.spec.generator(i) for i in gen_indices], cap)
    z = t.centralizer([t.spec.generator(i) for i in gen_indices], cap)
    # abelian join of two subgroups is the set of pairwise products
    join = {a * b for a in gamma_s.members for b in z.members}
    return len(join) == t.spec.size()


# --- tensor structure --------------------------------------------------------


def tensor_split(
    t: CCRTriple, left: Sequence[int], right: Sequence[int] | None = None
) -> tuple[CCRTriple, CCRTriple]:
    """Split into two restricted triples across a commuting partition.

    Raises TensorSplitRefusal naming a cross pair whose phase is not 1.
    """
    left = list(left)
    if right is None:
        right = [i for i in range(t.ngens) if i not in set(left)]
    right = list(right)
    if not left or not right:
        raise ValueError("both parts of the partition must be nonempty")
    if sorted(left + right) != list(range(t.ngens)):
        raise ValueError("partition must cover the generators exactly once")
    for i in left:
        for j in right:
            if not t.theta[i][j].is_one():
                raise TensorSplitRefusal(i, j, t.theta[i][j])
    return (t.restrict(left), t.restrict(right))


def tensor_join(t1: CCRTriple, t2: CCRTriple) -> CCRTriple:
    """Adjoin two triples with trivial cross-commutation (inverse of split)."""
    spec = GroupSpec(
        t1.spec.labels + t2.spec.labels, t1.spec.orders + t2.spec.orders
    )
    k1 = t1.ngens
    k = spec.ngens
    table = [[Phase.one() for _ in range(k)] for _ in range(k)]
    for i in range(k1):
        for j in range(k1):
            table[i][j] = t1.theta[i][j]
    for i in range(t2.ngens):
        for j in range(t2.ngens):
            table[k1 + i][k1 + j] = t2.theta[i][j]
    return CCRTriple(spec, table)


# --- functoriality ------------------------------------------------------------


def lift_defects(m: CCRMorphism) -> list[tuple[int, Phase]]:
    """Obstructions to sending each generator's unitary to its image monomial.

    Entry (i, rho) records that the image monomial of generator i, raised
    to the generator's order, is the scalar rho (always +-1 here) rather
    than 1.  An empty list means the basis-level lift exists.
    """
    out: list[tuple[int, Phase]] = []
    tgt = m.target
    for i, img in enumerate(m.images):
        f = m.source.spec.orders[i]
        v = AlgebraElement.monomial(tgt, img)
        acc = AlgebraElement.one(tgt)
        for _ in range(f):
            acc = multiply(acc, v)
        rho = acc.coefficient(tgt.spec.identity()).as_phase()
        if not rho.is_one():
            out.append((i, rho))
    return out


def reordering_phase(m: CCRMorphism, g: GroupElement) -> Phase:
    """sigma(g): the phase with Psi(u_g) = sigma(g) * u_{phi(g)}.

    Psi(u_g) is the product of the image monomials in source-generator
    order; sorting that product into the target's normal order produces
    sigma(g).  It is 1 whenever the generator map is an order-preserving
    map into single generators.
    """
    m.source._check_elem(g)
    tgt = m.target
    acc = AlgebraElement.one(tgt)
    for i, mi in enumerate(g.exponents):
        if mi:
            v = AlgebraElement.monomial(tgt, m.images[i])
            for _ in range(mi):
                acc = multiply(acc, v)
    return acc.coefficient(m.apply(g)).as_phase()


def induced_hom(m: CCRMorphism, a: AlgebraElement) -> AlgebraElement:
    """Apply the *-homomorphism induced by a checked morphism.

    Generators map to the monomials of their group images; a composite
    basis monomial picks up the computable re-normal-ordering phase.  The
    resulting map is injective and trace-preserving.  If some image
    monomial fails the generator's order relation (see lift_defects) the
    homomorphism does not exist and MorphismLiftError is raised.
    """
    report = m.check()
    if not report.ok:
        raise MorphismError(f"morphism fails verification: {report.failures[0]}")
    if a.triple != m.source:
        raise SpecMismatchError("element does not live in the morphism's source")
    defects = lift_defects(m)
    if defects:
        raise MorphismLiftError(*defects[0])
    tgt = m.target
    out: dict[GroupElement, Cyclotomic] = {}
    for g, c in a.terms.items():
        sigma = reordering_phase(m, g)
        key = m.apply(g)
        coeff = c * Cyclotomic.from_phase(sigma)
        out[key] = out[key] + coeff if key in out else coeff
    return AlgebraElement(tgt, out)


# --- JSON ----------------------------------------------------------------------


def element_to_dict(a: AlgebraElement) -> dict:
    return {
        "terms": [
            {"exponents": list(g.exponents), "coeff": a.terms[g].to_pairs()}
            for g in a.support()
        ]
    }


def element_from_dict(t: CCRTriple, data: dict) -> AlgebraElement:
    terms: dict[GroupElement, Cyclotomic] = {}
    for item in data.get("terms", ()):
        g = t.spec.element(item["exponents"])
        c = Cyclotomic.from_pairs(item["coeff"])
        terms[g] = terms[g] + c if g in terms else c
    return AlgebraElement(t, terms)

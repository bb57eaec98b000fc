"""Builders and analyzers for the three structured commutation patterns.

* ``pairing_triple(k, p)``: k pairs of order-p generators, the two members
  of a pair commuting up to exp(2*pi*i/p) and everything else commuting.
  The algebra is the full matrix algebra of size p^k.
* ``nonuniqueness_fragment(minus, p, m)``: a "matrix core" of paired
  generators with mixed prime orders, m+1 order-p pairs, and one extra
  order-p generator ``g*`` that pairs nontrivially with the 0-member of
  every pair.  The star generator is what breaks complementation for
  subsets omitting a pair.
* ``chain_triple(k, p)``: k pairs where the 0-member of pair x fails to
  commute with the 1-member of pair y exactly when x <= y.  The resulting
  one-sided pattern of commutator norms encodes the linear order, and it
  can be read back off the algebra.

The two generator substitutions shipped here (replacing g* by h, and
re-pairing a chain by g') are verified rather than trusted: the realized
pairing matrix of the substituted set is evaluated exhaustively through
the bicharacter and compared entry by entry against the intended pairing
pattern.  The straightforward cumulative-product candidates fail this
audit (the reports record witnesses); the corrected forms

    h  = g* . prod_j g(alpha_j, 1)^(p-1)
    g'(j, 1) = g(x_j, 1) . g(x_{j-1}, 1)^(p-1)

pass it exactly, and the audit certifies the resulting subalgebras are
full matrix algebras by an independent center scan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import AlgebraElement, is_full_matrix, multiply, tensor_join
from .cyclotomic import Phase
from .groups import DEFAULT_ENUMERATION_CAP, GroupElement, GroupSpec, Subgroup
from .triples import CCRMorphism, CCRTriple, make_triple

# --- pairing triples -----------------------------------------------------------


def pairing_block(orders: Sequence[int], prefix: str = "f") -> CCRTriple:
    """Pairs of equal-order generators, phase exp(2*pi*i/n) inside each pair."""
    labels = []
    gorders = []
    upper = []
    for a, n in enumerate(orders):
        labels += [f"{prefix}{a}_0", f"{prefix}{a}_1"]
        gorders += [n, n]
        upper.append((2 * a, 2 * a + 1, Phase.root(n)))
    spec = GroupSpec(tuple(labels), tuple(gorders))
    return make_triple(spec, upper)


@dataclass(frozen=True)
class PairingTriple:
    k: int
    p: int
    triple: CCRTriple

    def gen_index(self, alpha: int, i: int) -> int:
        return 2 * alpha + i

    def pair_indices(self, alpha: int) -> tuple[int, int]:
        return (2 * alpha, 2 * alpha + 1)


def pairing_triple(k: int, p: int, cap: int = DEFAULT_ENUMERATION_CAP) -> PairingTriple:
    if k < 1:
        raise ValueError("need at least one pair")
    if p**(2 * k) > cap:
        raise ValueError(f"group order p^(2k) = {p ** (2 * k)} exceeds cap {cap}")
    return PairingTriple(k, p, pairing_block([p] * k, prefix="g"))


# --- the fragment with a star generator ----------------------------------------


@dataclass(frozen=True)
class NonUniquenessFragment:
    """Matrix core + (m+1) order-p pairs + the star generator.

    Pairs are indexed alpha = 0..m; the intended distinguished subset keeps
    pairs 0..m-1 whole and keeps only the 0-member of pair m.
    """

    minus: tuple[tuple[int, int], ...]  # (prime, multiplicity)
    p: int
    m: int
    triple: CCRTriple
    f_count: int  # number of core generators (2 per core pair)

    def f_index(self, i: int, j: int, c: int) -> int:
        off = 0
        for idx, (_, k) in enumerate(self.minus):
            if idx == i:
                return off + 2 * j + c
            off += 2 * k
        raise IndexError("no such core pair")

    def g_index(self, alpha: int, c: int) -> int:
        if not 0 <= alpha <= self.m:
            raise IndexError("pair index out of range")
        return self.f_count + 2 * alpha + c

    @property
    def star_index(self) -> int:
        return self.f_count + 2 * (self.m + 1)

    def f_indices(self) -> list[int]:
        return list(range(self.f_count))

    def default_f_set(self) -> frozenset[int]:
        """Core + pairs 0..m-1 whole + the 0-member of pair m + star."""
        members = set(self.f_indices())
        for alpha in range(self.m):
            members |= {self.g_index(alpha, 0), self.g_index(alpha, 1)}
        members.add(self.g_index(self.m, 0))
        members.add(self.star_index)
        return frozenset(members)


def nonuniqueness_fragment(
    minus: Sequence[tuple[int, int]],
    p: int,
    m: int,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> NonUniquenessFragment:
    """Build the fragment; the star pairs with every g(alpha, 0) by exp(2*pi*i/p).

    Each core pair (i, j) carries the phase of its own prime order; phases
    of any other order would violate the gcd-order condition.
    """
    labels: list[str] = []
    orders: list[int] = []
    upper: list[tuple[int, int, Phase]] = []
    for i, (prime, mult) in enumerate(minus):
        for j in range(mult):
            base = len(labels)
            labels += [f"f{i}_{j}_0", f"f{i}_{j}_1"]
            orders += [prime, prime]
            upper.append((base, base + 1, Phase.root(prime)))
    f_count = len(labels)
    lam = Phase.root(p)
    for alpha in range(m + 1):
        base = len(labels)
        labels += [f"g{alpha}_0", f"g{alpha}_1"]
        orders += [p, p]
        upper.append((base, base + 1, lam))
    star = len(labels)
    labels.append("g_star")
    orders.append(p)
    for alpha in range(m + 1):
        upper.append((f_count + 2 * alpha, star, lam))
    spec = GroupSpec(tuple(labels), tuple(orders))
    total = spec.size()
    if total > cap:
        raise ValueError(f"group order {total} exceeds cap {cap}")
    return NonUniquenessFragment(
        tuple((int(a), int(b)) for a, b in minus), p, m, make_triple(spec, upper), f_count
    )


@dataclass(frozen=True)
class FSetReport:
    ok: bool
    failures: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": list(self.failures)}


def check_f_conditions(
    frag: NonUniquenessFragment, f_set: Iterable[int]
) -> FSetReport:
    """The three membership conditions a distinguished subset must satisfy:
    core generators come in whole pairs, the order-p pairs are whole on the
    1-side with exactly one leftover 0-member, and the star is present."""
    fs = frozenset(f_set)
    failures = []
    off = 0
    for i, (_, mult) in enumerate(frag.minus):
        for j in range(mult):
            in0 = off + 2 * j in fs
            in1 = off + 2 * j + 1 in fs
            if in0 != in1:
                failures.append(f"core pair ({i},{j}) is split by the subset")
        off += 2 * mult
    leftovers = []
    for alpha in range(frag.m + 1):
        in0 = frag.g_index(alpha, 0) in fs
        in1 = frag.g_index(alpha, 1) in fs
        if in1 and not in0:
            failures.append(f"pair {alpha} has its 1-member without its 0-member")
        if in0 and not in1:
            leftovers.append(alpha)
    if len(leftovers) != 1:
        failures.append(
            f"expected exactly one leftover 0-member, found {leftovers}"
        )
    if frag.star_index not in fs:
        failures.append("the star generator is missing")
    return FSetReport(not failures, tuple(failures))


# --- substitution audits ---------------------------------------------------------


@dataclass
class SubstitutionReport:
    """Result of auditing a generator substitution against a pairing target."""

    kind: str  # "star-replacement" | "chain-pairing"
    formula: str  # "corrected" | "literal"
    labels: tuple[str, ...]
    new_generators: tuple[GroupElement, ...]
    target: tuple[tuple[Phase, ...], ...]
    realized: tuple[tuple[Phase, ...], ...]
    met: bool
    witnesses: tuple[dict, ...]
    generates_same_subgroup: bool
    induced_triple: CCRTriple | None = None
    full_matrix: tuple[bool, int | None] | None = None
    morphism_ok: bool | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "formula": self.formula,
            "labels": list(self.labels),
            "new_generators": [list(g.exponents) for g in self.new_generators],
            "target": [[str(p) for p in row] for row in self.target],
            "realized": [[str(p) for p in row] for row in self.realized],
            "met": self.met,
            "witnesses": list(self.witnesses),
            "generates_same_subgroup": self.generates_same_subgroup,
            "full_matrix": list(self.full_matrix) if self.full_matrix else None,
            "morphism_ok": self.morphism_ok,
        }


def _pairing_target(orders: Sequence[int]) -> tuple[tuple[Phase, ...], ...]:
    """Block-diagonal pairing pattern over consecutive pairs of generators."""
    n = len(orders)
    rows = [[Phase.one() for _ in range(n)] for _ in range(n)]
    for a in range(n // 2):
        lam = Phase.root(orders[2 * a])
        rows[2 * a][2 * a + 1] = lam
        rows[2 * a + 1][2 * a] = lam.conj()
    return tuple(tuple(row) for row in rows)


def _audit_substitution(
    kind: str,
    formula: str,
    base: CCRTriple,
    labels: Sequence[str],
    new_gens: Sequence[GroupElement],
    old_gens: Sequence[GroupElement],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> SubstitutionReport:
    """Evaluate the realized pairing matrix of a substituted generating set
    against the pairing-pattern target, and certify the outcome."""
    n = len(new_gens)
    orders = [g.order() for g in new_gens]
    target = _pairing_target(orders)
    realized = tuple(
        tuple(base.bicharacter(new_gens[i], new_gens[j]) for j in range(n))
        for i in range(n)
    )
    witnesses = []
    for i in range(n):
        for j in range(n):
            if realized[i][j] != target[i][j]:
                witnesses.append(
                    {
                        "pair": [labels[i], labels[j]],
                        "expected": str(target[i][j]),
                        "got": str(realized[i][j]),
                    }
                )
    met = not witnesses
    same = Subgroup.generated(base.spec, new_gens, cap).members == Subgroup.generated(
        base.spec, old_gens, cap
    ).members
    report = SubstitutionReport(
        kind,
        formula,
        tuple(labels),
        tuple(new_gens),
        target,
        realized,
        met,
        tuple(witnesses),
        same,
    )
    # model triple realized by the new set, whatever the pairing came out as
    spec = GroupSpec(tuple(labels), tuple(orders))
    table = [[realized[i][j] for j in range(n)] for i in range(n)]
    model = CCRTriple(spec, table)
    if model.validate().ok:
        report.induced_triple = model
        report.full_matrix = is_full_matrix(model, cap)
        images = tuple(new_gens)
        report.morphism_ok = CCRMorphism(model, base, images).check(cap).ok
    return report


def substitute_and_verify(
    frag: NonUniquenessFragment,
    f_set: Iterable[int] | None = None,
    literal: bool = False,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> SubstitutionReport:
    """Replace the star generator by a product h and audit the new pairing.

    The straightforward candidate h = g* . prod g(alpha_j, 0) leaves
    lambda-pairings between h and every g(alpha_j, 0); the corrected
    candidate multiplies the 1-members' inverses instead,

        h = g* . prod_{j<m'} g(alpha_j, 1)^(p-1),

    which cancels the star's pairing against each whole pair and realizes
    the clean pairing pattern with the leftover 0-member.
    """
    fs = frozenset(f_set) if f_set is not None else frag.default_f_set()
    cond = check_f_conditions(frag, fs)
    if not cond.ok:
        raise ValueError(f"subset fails the membership conditions: {cond.failures}")
    spec = frag.triple.spec
    whole = [
        alpha
        for alpha in range(frag.m + 1)
        if frag.g_index(alpha, 0) in fs and frag.g_index(alpha, 1) in fs
    ]
    (leftover,) = [
        alpha
        for alpha in range(frag.m + 1)
        if frag.g_index(alpha, 0) in fs and frag.g_index(alpha, 1) not in fs
    ]
    h = spec.generator(frag.star_index)
    piece = 0 if literal else 1
    power = 1 if literal else frag.p - 1
    for alpha in whole:
        h = h * spec.generator(frag.g_index(alpha, piece), power)
    labels: list[str] = []
    new_gens: list[GroupElement] = []
    off = 0
    for i, (_, mult) in enumerate(frag.minus):
        for j in range(mult):
            if off + 2 * j in fs:
                labels += [f"f{i}_{j}_0", f"f{i}_{j}_1"]
                new_gens += [
                    spec.generator(frag.f_index(i, j, 0)),
                    spec.generator(frag.f_index(i, j, 1)),
                ]
        off += 2 * mult
    for alpha in whole:
        labels += [f"g{alpha}_0", f"g{alpha}_1"]
        new_gens += [
            spec.generator(frag.g_index(alpha, 0)),
            spec.generator(frag.g_index(alpha, 1)),
        ]
    labels += [f"g{leftover}_0", "h"]
    new_gens += [spec.generator(frag.g_index(leftover, 0)), h]
    old_gens = [spec.generator(i) for i in sorted(fs)]
    return _audit_substitution(
        "star-replacement",
        "literal" if literal else "corrected",
        frag.triple,
        labels,
        new_gens,
        old_gens,
        cap,
    )


# --- complementation contrast ----------------------------------------------------


@dataclass(frozen=True)
class ComplementationSide:
    description: str
    kept_indices: tuple[int, ...]
    complemented: bool
    centralizer_size: int
    centralizer_sample: tuple[str, ...]
    missing_witness: str | None

    def to_dict(self) -> dict:
        return {
            "description": self.description,
            "kept_indices": list(self.kept_indices),
            "complemented": self.complemented,
            "centralizer_size": self.centralizer_size,
            "centralizer_sample": list(self.centralizer_sample),
            "missing_witness": self.missing_witness,
        }


@dataclass(frozen=True)
class ContrastReport:
    fragment_side: ComplementationSide
    pairing_side: ComplementationSide

    def contrast(self) -> bool:
        return (
            not self.fragment_side.complemented and self.pairing_side.complemented
        )

    def to_dict(self) -> dict:
        return {
            "fragment": self.fragment_side.to_dict(),
            "pairing": self.pairing_side.to_dict(),
            "contrast": self.contrast(),
        }


def _complementation_side(
    t: CCRTriple, kept: Sequence[int], description: str, cap: int
) -> ComplementationSide:
    gens = [t.spec.generator(i) for i in kept]
    z = t.centralizer(gens, cap)
    gamma = Subgroup.generated(t.spec, gens, cap)
    join = {a * b for a in gamma.members for b in z.members}
    complemented = len(join) == t.spec.size()
    witness = None
    if not complemented:
        for i in range(t.ngens):
            if t.spec.generator(i) not in join:
                witness = t.spec.labels[i]
                break
        if witness is None:
            witness = str(next(g for g in t.spec.elements(cap) if g not in join))
    sample = []
    for g in sorted(z.members, key=t.spec.rank):
        if not g.is_identity():
            sample.append(str(g))
        if len(sample) >= 4:
            break
    return ComplementationSide(
        description, tuple(kept), complemented, len(z), tuple(sample), witness
    )


def complementation_contrast(
    frag: NonUniquenessFragment,
    pairing: PairingTriple,
    omit_pair: int = 0,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> ContrastReport:
    """Drop one whole pair on each side and compare complementation.

    On the fragment side the star keeps pairing with the dropped pair's
    0-member, so the centralizer of the kept set only recovers the dropped
    1-member and the join misses the group: not complemented.  The pure
    pairing triple has no star; the dropped pair commutes with everything
    kept and complementation holds.
    """
    if not 0 <= omit_pair <= frag.m:
        raise ValueError("no such pair in the fragment")
    kept_frag = sorted(
        set(frag.f_indices())
        | {
            frag.g_index(alpha, c)
            for alpha in range(frag.m + 1)
            if alpha != omit_pair
            for c in (0, 1)
        }
        | {frag.star_index}
    )
    frag_side = _complementation_side(
        frag.triple,
        kept_frag,
        f"fragment with star, pair {omit_pair} omitted",
        cap,
    )
    omit_pairing = omit_pair if omit_pair < pairing.k else 0
    kept_pair = [
        i
        for alpha in range(pairing.k)
        if alpha != omit_pairing
        for i in pairing.pair_indices(alpha)
    ]
    pair_side = _complementation_side(
        pairing.triple,
        kept_pair,
        f"pure pairing triple, pair {omit_pairing} omitted",
        cap,
    )
    return ContrastReport(frag_side, pair_side)


# --- chain triples -----------------------------------------------------------------


@dataclass(frozen=True)
class ChainTriple:
    """k pairs whose one-sided commutation pattern encodes a linear order.

    ``arrangement[s]`` is the chain position of the pair stored in slot s;
    the default is the identity, i.e. slots already in chain order.
    """

    k: int
    p: int
    triple: CCRTriple
    arrangement: tuple[int, ...]

    def gen_index(self, slot: int, c: int) -> int:
        return 2 * slot + c

    @property
    def lam(self) -> Phase:
        return Phase.root(self.p)


def chain_triple(
    k: int,
    p: int,
    arrangement: Sequence[int] | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> ChainTriple:
    """Pairs (g(x,0), g(x,1)) with g(x,0) vs g(y,1) carrying the phase
    exp(2*pi*i/p) exactly when x <= y in the chain order."""
    if k < 1:
        raise ValueError("need at least one pair")
    if p**(2 * k) > cap:
        raise ValueError(f"group order p^(2k) = {p ** (2 * k)} exceeds cap {cap}")
    arr = tuple(arrangement) if arrangement is not None else tuple(range(k))
    if sorted(arr) != list(range(k)):
        raise ValueError("arrangement must be a permutation of the slots")
    labels = []
    for s in range(k):
        labels += [f"g{s}_0", f"g{s}_1"]
    spec = GroupSpec(tuple(labels), (p,) * (2 * k))
    lam = Phase.root(p)
    upper = []
    for s in range(k):
        for t in range(k):
            i, j = 2 * s, 2 * t + 1
            if i < j and arr[s] <= arr[t]:
                upper.append((i, j, lam))
            elif j < i and arr[s] <= arr[t]:
                # stored below the diagonal: enter the conjugate at (j, i)
                upper.append((j, i, lam.conj()))
    return ChainTriple(k, p, make_triple(spec, upper), arr)


def _single_term_norm(a: AlgebraElement) -> float:
    if not a.terms:
        return 0.0
    ((_, coeff),) = a.terms.items()
    mod2 = (coeff * coeff.conj()).to_complex().real
    return math.sqrt(max(mod2, 0.0))


def phi(ct: ChainTriple, x: int, y: int) -> float:
    """Half the commutator norm of (0-member of slot x, 1-member of slot y).

    The commutator of two basis unitaries is (t - 1) times a unitary with
    t the commutation phase, so the value is |t - 1| / 2 exactly: positive
    exactly when slot x precedes-or-equals slot y in the chain, and then
    equal to |exp(2*pi*i/p) - 1| / 2 (which is 1 only for p = 2).
    """
    t = ct.triple
    a = AlgebraElement.monomial(t, t.spec.generator(ct.gen_index(x, 0)))
    d = AlgebraElement.monomial(t, t.spec.generator(ct.gen_index(y, 1)))
    comm = multiply(a, d) - multiply(d, a)
    return 0.5 * _single_term_norm(comm)


def phi_matrix(ct: ChainTriple) -> list[list[float]]:
    return [[phi(ct, x, y) for y in range(ct.k)] for x in range(ct.k)]


def recover_order(ct: ChainTriple) -> list[int]:
    """Chain position of each slot, read off the zero pattern of phi.

    Slot x precedes-or-equals slot y exactly when phi(x, y) > 0, so the
    number of nonzero entries in row x determines x's position from the
    end; the positions must come out as a permutation or the input was
    not a chain pattern.
    """
    counts = [sum(1 for y in range(ct.k) if phi(ct, x, y) > 0) for x in range(ct.k)]
    positions = [ct.k - c for c in counts]
    if sorted(positions) != list(range(ct.k)):
        raise ValueError("phi pattern is not a linear chain")
    return positions


def chain_change_of_generators(
    ct: ChainTriple,
    slots: Sequence[int] | None = None,
    literal: bool = False,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> SubstitutionReport:
    """Re-pair the chain so that distinct pairs commute, and audit it.

    With x(0) < ... < x(m-1) the chosen slots in chain order, the
    cumulative candidate g'(j,1) = g(x_j,1) . prod_{l<j} g(x_l,1) leaves
    phases of the form lambda^(1 + j - i) between g'(i,0) and g'(j,1); the
    corrected difference form

        g'(j,1) = g(x_j,1) . g(x_{j-1},1)^(p-1)

    telescopes the chain pattern to the clean pairing pattern.
    """
    chosen = list(slots) if slots is not None else list(range(ct.k))
    chosen.sort(key=lambda s: ct.arrangement[s])
    spec = ct.triple.spec
    labels: list[str] = []
    new_gens: list[GroupElement] = []
    for j, s in enumerate(chosen):
        g0 = spec.generator(ct.gen_index(s, 0))
        g1 = spec.generator(ct.gen_index(s, 1))
        if j > 0:
            if literal:
                for prev in chosen[:j]:
                    g1 = g1 * spec.generator(ct.gen_index(prev, 1))
            else:
                g1 = g1 * spec.generator(ct.gen_index(chosen[j - 1], 1), ct.p - 1)
        labels += [f"q{j}_0", f"q{j}_1"]
        new_gens += [g0, g1]
    old_gens = [
        spec.generator(ct.gen_index(s, c)) for s in chosen for c in (0, 1)
    ]
    return _audit_substitution(
        "chain-pairing",
        "literal" if literal else "corrected",
        ct.triple,
        labels,
        new_gens,
        old_gens,
        cap,
    )


def chain_with_core(
    minus: Sequence[tuple[int, int]], p: int, k: int
) -> CCRTriple:
    """Adjoin a mixed-prime pairing core to a chain with trivial
    cross-commutation; the chain pattern survives the adjunction."""
    core_orders = [prime for prime, mult in minus for _ in range(mult)]
    core = pairing_block(core_orders, prefix="f")
    return tensor_join(core, chain_triple(k, p).triple)

"""CCR triples: a finite abelian group with ordered generators and a
commutation-phase table on generator pairs.

The defining conditions on the phase table ``theta``:

* diagonal entries are 1,
* the table is conjugate-symmetric,
* theta[i][j] ** gcd(order_i, order_j) == 1.

The third condition is exactly what scalar commutation of finite-order
unitaries forces: from u^m = 1 = v^n and uv = t vu one gets t^m = t^n = 1,
hence t^gcd(m,n) = 1.  ``bicharacter`` extends the table multiplicatively
in each slot to the whole group; ``centralizer`` collects the elements
pairing trivially against a given set.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .cyclotomic import Phase
from .errors import SpecMismatchError
from .groups import (
    DEFAULT_ENUMERATION_CAP,
    GroupElement,
    GroupSpec,
    Subgroup,
    group_spec_from_dict,
    group_spec_to_dict,
)


@dataclass(frozen=True)
class ConditionViolation:
    condition: str  # "diagonal" | "conjugate-symmetry" | "gcd-order"
    pair: tuple[int, int]
    detail: str

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "pair": list(self.pair),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[ConditionViolation, ...]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_dict() for v in self.violations]}


class CCRTriple:
    """Group spec plus the generator-level phase table.

    The table is stored complete (all i, j); use ``make_triple`` to build a
    canonical valid table from upper-triangle data.  ``validate`` reports
    violations instead of raising, so invalid tables can be inspected.
    """

    def __init__(self, spec: GroupSpec, theta: Sequence[Sequence[Phase]]) -> None:
        k = spec.ngens
        if len(theta) != k or any(len(row) != k for row in theta):
            raise ValueError("theta table must be square over the generators")
        self.spec = spec
        self.theta = tuple(tuple(row) for row in theta)
        # Common-denominator integer form of the table, for fast exact
        # bicharacter/cocycle exponents without Fraction churn.
        den = 1
        for row in self.theta:
            for p in row:
                den = lcm(den, p.q.denominator)
        self._den = den
        self._num = tuple(
            tuple(int(p.q * den) for p in row) for row in self.theta
        )

    @property
    def ngens(self) -> int:
        return self.spec.ngens

    def dimension(self) -> int:
        """Dimension of the associated twisted algebra: the group order."""
        return self.spec.size()

    # -- validation --

    def validate(self) -> ValidationReport:
        bad: list[ConditionViolation] = []
        k = self.ngens
        for i in range(k):
            if not self.theta[i][i].is_one():
                bad.append(
                    ConditionViolation(
                        "diagonal", (i, i), f"theta[{i}][{i}] = {self.theta[i][i]}"
                    )
                )
        for i in range(k):
            for j in range(i + 1, k):
                if self.theta[i][j] != self.theta[j][i].conj():
                    bad.append(
                        ConditionViolation(
                            "conjugate-symmetry",
                            (i, j),
                            f"theta[{i}][{j}] = {self.theta[i][j]} but "
                            f"conj(theta[{j}][{i}]) = {self.theta[j][i].conj()}",
                        )
                    )
        orders = self.spec.orders
        for i in range(k):
            for j in range(k):
                d = gcd(orders[i], orders[j])
                if not (self.theta[i][j] ** d).is_one():
                    bad.append(
                        ConditionViolation(
                            "gcd-order",
                            (i, j),
                            f"theta[{i}][{j}]^gcd({orders[i]},{orders[j]}) = "
                            f"{self.theta[i][j] ** d} != 1",
                        )
                    )
        return ValidationReport(not bad, tuple(bad))

    # -- the bicharacter and its exponent fast path --

    def _pairing_exponent(
        self, m: Sequence[int], n: Sequence[int], lower_only: bool = False
    ) -> Fraction:
        """Integer-arithmetic core: sum q_ij * m_i * n_j over pairs (mod 1).

        With lower_only, only pairs i > j enter -- the normal-ordering
        cocycle exponent instead of the full pairing exponent.
        """
        num = self._num
        den = self._den
        total = 0
        for i, mi in enumerate(m):
            if not mi:
                continue
            row = num[i]
            rng = range(i) if lower_only else range(len(n))
            for j in rng:
                nj = n[j]
                if nj and row[j]:
                    total += row[j] * mi * nj
        return Fraction(total % den, den)

    def bicharacter(self, g: GroupElement, h: GroupElement) -> Phase:
        """The pairing extended multiplicatively in each slot to the group."""
        self._check_elem(g)
        self._check_elem(h)
        return Phase(self._pairing_exponent(g.exponents, h.exponents))

    def _check_elem(self, g: GroupElement) -> None:
        if g.spec != self.spec:
            raise SpecMismatchError("element does not belong to this triple's group")

    # -- centralizers --

    def centralizer(
        self,
        gens: Iterable[GroupElement],
        cap: int = DEFAULT_ENUMERATION_CAP,
    ) -> Subgroup:
        """{g : pairing(x, g) = 1 for all x in gens}, as a subgroup."""
        gens = tuple(gens)
        for x in gens:
            self._check_elem(x)
        members = [
            g
            for g in self.spec.elements(cap)
            if all(self.bicharacter(x, g).is_one() for x in gens)
        ]
        return Subgroup(self.spec, frozenset(members))

    def restrict(self, indices: Sequence[int]) -> "CCRTriple":
        """The triple on a sub-list of generators (order inherited)."""
        idx = list(indices)
        sub = GroupSpec(
            tuple(self.spec.labels[i] for i in idx),
            tuple(self.spec.orders[i] for i in idx),
        )
        return CCRTriple(
            sub, [[self.theta[i][j] for j in idx] for i in idx]
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CCRTriple)
            and self.spec == other.spec
            and self.theta == other.theta
        )

    def __repr__(self) -> str:
        return f"CCRTriple({self.spec.labels}, orders={self.spec.orders})"


def make_triple(
    spec: GroupSpec,
    upper: Mapping[tuple[int, int], Phase] | Iterable[tuple[int, int, Phase]] = (),
    enforce: bool = True,
) -> CCRTriple:
    """Build a triple from strictly-upper-triangle phases.

    The diagonal is forced to 1 and the lower triangle is filled by
    conjugation.  With enforce=True (the default) the gcd-order condition
    is checked and a ValueError carries the offending pair.
    """
    if isinstance(upper, Mapping):
        entries = [(i, j, p) for (i, j), p in upper.items()]
    else:
        entries = [(i, j, p) for i, j, p in upper]
    k = spec.ngens
    table: list[list[Phase]] = [
        [Phase.one() for _ in range(k)] for _ in range(k)
    ]
    for i, j, p in entries:
        if not 0 <= i < j < k:
            raise ValueError(f"only strictly-upper entries accepted, got ({i},{j})")
        table[i][j] = p
        table[j][i] = p.conj()
    triple = CCRTriple(spec, table)
    if enforce:
        report = triple.validate()
        if not report.ok:
            v = report.violations[0]
            raise ValueError(f"invalid commutation data: {v.condition} at {v.pair}: {v.detail}")
    return triple


def validate_triple(t: CCRTriple) -> ValidationReport:
    return t.validate()


def bicharacter(t: CCRTriple, g: GroupElement, h: GroupElement) -> Phase:
    return t.bicharacter(g, h)


def centralizer(
    t: CCRTriple,
    gens: Iterable[GroupElement],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Subgroup:
    return t.centralizer(gens, cap)


# --- morphisms ---------------------------------------------------------------


@dataclass
class CCRMorphism:
    """Group homomorphism between triples, given by generator images.

    The map extends by linearity on exponent vectors.  ``check`` verifies
    well-definedness (image orders divide generator orders), injectivity
    (trivial kernel, by enumeration) and preservation of the pairing on
    generator pairs, which suffices by bimultiplicativity.
    """

    source: CCRTriple
    target: CCRTriple
    images: tuple[GroupElement, ...]
    _report: "MorphismReport | None" = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.images) != self.source.ngens:
            raise ValueError("need one image per source generator")
        for v in self.images:
            if v.spec != self.target.spec:
                raise SpecMismatchError("image lies in the wrong group")

    def apply(self, g: GroupElement) -> GroupElement:
        self.source._check_elem(g)
        tgt = self.target.spec
        exps = [0] * tgt.ngens
        for m, img in zip(g.exponents, self.images):
            if m:
                for i, x in enumerate(img.exponents):
                    exps[i] += m * x
        return tgt.element(exps)

    def check(self, cap: int = DEFAULT_ENUMERATION_CAP) -> "MorphismReport":
        if self._report is None:
            self._report = _check_morphism(self, cap)
        return self._report

    def is_generator_map(self) -> tuple[bool, bool]:
        """(maps generators to single generators, order-preservingly so)."""
        positions = []
        for img in self.images:
            sup = img.support()
            if len(sup) != 1:
                return (False, False)
            positions.append(sup[0])
        increasing = all(a < b for a, b in zip(positions, positions[1:]))
        return (True, increasing)


@dataclass(frozen=True)
class MorphismReport:
    ok: bool
    failures: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": list(self.failures)}


def _check_morphism(m: CCRMorphism, cap: int) -> MorphismReport:
    failures: list[dict] = []
    src = m.source
    tgt = m.target
    for i, img in enumerate(m.images):
        if img.order() > 1 and src.spec.orders[i] % img.order() != 0:
            failures.append(
                {
                    "kind": "order",
                    "generator": i,
                    "detail": f"image order {img.order()} does not divide "
                    f"{src.spec.orders[i]}",
                }
            )
    if not failures:
        # kernel scan; for an abelian group trivial kernel means injective
        for g in src.spec.elements(cap):
            if not g.is_identity() and m.apply(g).is_identity():
                failures.append(
                    {"kind": "injectivity", "witness": list(g.exponents)}
                )
                break
    for i in range(src.ngens):
        for j in range(src.ngens):
            want = src.theta[i][j]
            got = tgt.bicharacter(m.images[i], m.images[j])
            if want != got:
                failures.append(
                    {
                        "kind": "pairing",
                        "pair": [i, j],
                        "expected": str(want),
                        "got": str(got),
                    }
                )
    return MorphismReport(not failures, tuple(failures))


def check_morphism(m: CCRMorphism, cap: int = DEFAULT_ENUMERATION_CAP) -> MorphismReport:
    return m.check(cap)


# --- JSON ---------------------------------------------------------------------


def triple_to_dict(t: CCRTriple) -> dict:
    entries = []
    for i in range(t.ngens):
        for j in range(i + 1, t.ngens):
            if not t.theta[i][j].is_one():
                entries.append({"i": i, "j": j, "phase": str(t.theta[i][j])})
    return {"group": group_spec_to_dict(t.spec), "theta": entries}


def triple_from_dict(data: dict, enforce: bool = True) -> CCRTriple:
    spec = group_spec_from_dict(data["group"])
    upper = []
    for entry in data.get("theta", ()):
        i, j = int(entry["i"]), int(entry["j"])
        if not 0 <= i < j < spec.ngens:
            raise ValueError(
                f"theta entries must have 0 <= i < j < {spec.ngens}, got ({i},{j})"
            )
        upper.append((i, j, Phase.parse(str(entry["phase"]))))
    return make_triple(spec, upper, enforce=enforce)

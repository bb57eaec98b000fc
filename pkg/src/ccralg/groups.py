"""Finite direct sums of cyclic groups with an ordered generator list.

The generator list is ordered; that order is what normal-ordered monomials
in the algebra refer to.  Generator labels are for I/O only -- identity of
a generator is its position.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationCapError, SpecMismatchError

#: Default bound on the size of any group that gets enumerated.
DEFAULT_ENUMERATION_CAP = 1 << 20


@dataclass(frozen=True)
class GroupSpec:
    """Ordered list of cyclic factors; all orders finite and >= 2."""

    labels: tuple[str, ...]
    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.orders):
            raise ValueError("labels and orders must align")
        if any(o < 2 for o in self.orders):
            raise ValueError("every cyclic factor must have order >= 2")

    def __hash__(self) -> int:  # cached; specs key every hot dictionary
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.labels, self.orders))
            object.__setattr__(self, "_hash", h)
        return h

    @classmethod
    def of(cls, generators: Sequence[tuple[str, int]]) -> "GroupSpec":
        return cls(tuple(g[0] for g in generators), tuple(int(g[1]) for g in generators))

    @classmethod
    def cyclic(cls, orders: Sequence[int], prefix: str = "g") -> "GroupSpec":
        return cls(
            tuple(f"{prefix}{i}" for i in range(len(orders))),
            tuple(int(o) for o in orders),
        )

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def size(self) -> int:
        return prod(self.orders)

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ngens)

    def element(self, exponents: Sequence[int]) -> "GroupElement":
        if len(exponents) != self.ngens:
            raise ValueError(
                f"expected {self.ngens} exponents, got {len(exponents)}"
            )
        return GroupElement(
            self, tuple(int(m) % o for m, o in zip(exponents, self.orders))
        )

    def generator(self, i: int, power: int = 1) -> "GroupElement":
        exps = [0] * self.ngens
        exps[i] = power
        return self.element(exps)

    def generators(self) -> tuple["GroupElement", ...]:
        return tuple(self.generator(i) for i in range(self.ngens))

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator["GroupElement"]:
        """All group elements, last coordinate fastest (rank order)."""
        self.check_cap(cap)
        for exps in product(*(range(o) for o in self.orders)):
            yield GroupElement(self, exps)

    def check_cap(self, cap: int = DEFAULT_ENUMERATION_CAP) -> None:
        if self.size() > cap:
            raise EnumerationCapError(
                f"group of order {self.size()} exceeds enumeration cap {cap}"
            )

    def rank(self, g: "GroupElement") -> int:
        r = 0
        for m, o in zip(g.exponents, self.orders):
            r = r * o + m
        return r

    def unrank(self, r: int) -> "GroupElement":
        exps = [0] * self.ngens
        for i in range(self.ngens - 1, -1, -1):
            r, exps[i] = divmod(r, self.orders[i])
        return GroupElement(self, tuple(exps))


@dataclass(frozen=True)
class GroupElement:
    """Exponent vector reduced componentwise mod the generator orders."""

    spec: GroupSpec
    exponents: tuple[int, ...]

    def __hash__(self) -> int:
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.spec, self.exponents))
            object.__setattr__(self, "_hash", h)
        return h

    def _check(self, other: "GroupElement") -> None:
        if self.spec != other.spec:
            raise SpecMismatchError("elements of different group specs")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.spec,
            tuple(
                (a + b) % o
                for a, b, o in zip(self.exponents, other.exponents, self.spec.orders)
            ),
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(
            self.spec,
            tuple((-a) % o for a, o in zip(self.exponents, self.spec.orders)),
        )

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(
            self.spec,
            tuple((a * k) % o for a, o in zip(self.exponents, self.spec.orders)),
        )

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def order(self) -> int:
        """Least k > 0 with g^k = e."""
        return lcm(
            *(o // gcd(m, o) for m, o in zip(self.exponents, self.spec.orders))
        ) if self.exponents else 1

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, m in enumerate(self.exponents) if m)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"


def element_compose(g: GroupElement, h: GroupElement) -> GroupElement:
    return g * h


def element_inverse(g: GroupElement) -> GroupElement:
    return g.inverse()


class Subgroup:
    """A subgroup held as its full member set plus a generating set."""

    def __init__(
        self,
        spec: GroupSpec,
        members: frozenset[GroupElement],
        generators: tuple[GroupElement, ...] = (),
    ) -> None:
        self.spec = spec
        self.members = members
        self.generators = generators

    @classmethod
    def generated(
        cls,
        spec: GroupSpec,
        gens: Iterable[GroupElement],
        cap: int = DEFAULT_ENUMERATION_CAP,
    ) -> "Subgroup":
        spec.check_cap(cap)
        gens = tuple(gens)
        for g in gens:
            if g.spec != spec:
                raise SpecMismatchError("generator from a different spec")
        members = {spec.identity()}
        frontier = [spec.identity()]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    gh = g * h
                    if gh not in members:
                        members.add(gh)
                        nxt.append(gh)
            frontier = nxt
        return cls(spec, frozenset(members), gens)

    @classmethod
    def from_members(
        cls, spec: GroupSpec, members: Iterable[GroupElement]
    ) -> "Subgroup":
        """Wrap an explicit member set, verifying closure."""
        mset = frozenset(members)
        if spec.identity() not in mset:
            raise ValueError("member set does not contain the identity")
        for g in mset:
            if g.inverse() not in mset:
                raise ValueError(f"member set not closed under inverse at {g}")
            for h in mset:
                if g * h not in mset:
                    raise ValueError(f"member set not closed under product at {g},{h}")
        return cls(spec, mset)

    @classmethod
    def full(cls, spec: GroupSpec, cap: int = DEFAULT_ENUMERATION_CAP) -> "Subgroup":
        return cls(spec, frozenset(spec.elements(cap)), spec.generators())

    @classmethod
    def trivial(cls, spec: GroupSpec) -> "Subgroup":
        return cls(spec, frozenset([spec.identity()]))

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(sorted(self.members, key=self.spec.rank))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.spec == other.spec
            and self.members == other.members
        )

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def is_full(self) -> bool:
        return len(self.members) == self.spec.size()


def subgroup_generated(
    spec: GroupSpec,
    gens: Iterable[GroupElement],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Subgroup:
    return Subgroup.generated(spec, gens, cap)


def subgroup_member(g: GroupElement, sub: Subgroup) -> bool:
    if g.spec != sub.spec:
        raise SpecMismatchError("element from a different spec")
    return g in sub


def group_spec_to_dict(spec: GroupSpec) -> dict:
    return {
        "generators": [
            {"label": lab, "order": o} for lab, o in zip(spec.labels, spec.orders)
        ]
    }


def group_spec_from_dict(data: dict) -> GroupSpec:
    gens = data["generators"]
    return GroupSpec.of([(g["label"], int(g["order"])) for g in gens])

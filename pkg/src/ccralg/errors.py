"""Exception types shared across the package."""

from __future__ import annotations


class CapacityError(RuntimeError):
    """A configured size bound would be exceeded."""


class ConductorCapError(CapacityError):
    """Cyclotomic conductor promotion would exceed the configured cap."""


class EnumerationCapError(CapacityError):
    """Group enumeration would exceed the configured cap."""


class SpecMismatchError(ValueError):
    """Operands belong to different group specs or different triples."""


class TensorSplitRefusal(ValueError):
    """A tensor factorization was requested across a non-commuting pair."""

    def __init__(self, i: int, j: int, phase: object) -> None:
        self.pair = (i, j)
        self.phase = phase
        super().__init__(
            f"cross pair ({i}, {j}) carries phase {phase} != 1; no tensor splitting"
        )


class MorphismError(ValueError):
    """A map between triples is not a valid verified morphism."""


class MorphismLiftError(MorphismError):
    """The generator order relation does not lift along this morphism.

    Preserving the pairing phases does not by itself force the image
    monomial of a generator to have the generator's order: its f-th power
    can be a nontrivial scalar (always +-1).  When that happens there is
    no *-homomorphism sending each basic unitary to the image monomial
    on the nose, and callers must not pretend otherwise.
    """

    def __init__(self, generator: int, defect: object) -> None:
        self.generator = generator
        self.defect = defect
        super().__init__(
            f"image of generator {generator} raised to its order gives the "
            f"scalar {defect} != 1; the basis-to-basis lift does not exist"
        )

"""Shared builders for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

import pytest

from ccralg import (
    AlgebraElement,
    CCRTriple,
    Cyclotomic,
    GroupSpec,
    Phase,
    make_triple,
)


def pauli_triple() -> CCRTriple:
    """Two order-2 generators anticommuting: the 2x2 clock/shift pattern."""
    return make_triple(GroupSpec.cyclic([2, 2]), [(0, 1, Phase.minus_one())])


@pytest.fixture
def pauli() -> CCRTriple:
    return pauli_triple()


def random_valid_triple(
    rng: random.Random,
    max_gens: int = 4,
    max_order: int = 6,
    max_size: int = 512,
    allow_trivial: bool = True,
) -> CCRTriple:
    """Random generator orders plus random phases obeying the gcd-order rule."""
    while True:
        k = rng.randint(1, max_gens)
        orders = [rng.randint(2, max_order) for _ in range(k)]
        size = 1
        for o in orders:
            size *= o
        if size <= max_size:
            break
    upper = []
    for i in range(k):
        for j in range(i + 1, k):
            d = gcd(orders[i], orders[j])
            t = rng.randrange(d)
            if t or allow_trivial:
                upper.append((i, j, Phase(Fraction(t, d))))
    return make_triple(GroupSpec.cyclic(orders), upper)


def random_element(
    rng: random.Random,
    t: CCRTriple,
    max_terms: int = 4,
    rational_only: bool = False,
) -> AlgebraElement:
    spec = t.spec
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        g = spec.element([rng.randrange(o) for o in spec.orders])
        coeff = Cyclotomic.from_rational(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
        if not rational_only and rng.random() < 0.5:
            root = Phase(Fraction(rng.randrange(12), 12))
            coeff = coeff * Cyclotomic.from_phase(root)
        terms[g] = terms[g] + coeff if g in terms else coeff
    return AlgebraElement(t, terms)

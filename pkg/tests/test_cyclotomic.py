"""Exact phase and cyclotomic arithmetic."""

from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccralg import Cyclotomic, Phase, cyclotomic_polynomial, set_conductor_cap
from ccralg.errors import ConductorCapError

phases = st.builds(
    lambda n, k: Phase(Fraction(k, n)),
    st.integers(min_value=1, max_value=24),
    st.integers(min_value=0, max_value=48),
)


def test_phase_canonical_examples():
    assert Phase.minus_one() * Phase.minus_one() == Phase.one()
    assert Phase(Fraction(1, 3)).order == 3
    # i squared is -1; the gcd rule then rejects i on orders (4, 6)
    assert Phase(Fraction(1, 4)) ** 2 == Phase.minus_one()
    assert (Phase(Fraction(1, 4)) ** 2) ** 2 == Phase.one()


def test_phase_parse_and_str():
    assert str(Phase.one()) == "0"
    assert str(Phase(Fraction(3, 6))) == "1/2"
    assert Phase.parse("2/8") == Phase(Fraction(1, 4))
    assert Phase.parse("0") == Phase.one()
    with pytest.raises(ValueError):
        Phase.parse("x/y")


@given(phases, phases)
def test_phase_commutative(a, b):
    assert a * b == b * a


@given(phases, phases)
def test_phase_conj_distributes(a, b):
    assert (a * b).conj() == a.conj() * b.conj()


@given(phases)
def test_phase_order_power(a):
    assert (a ** a.order).is_one()
    assert abs(a.to_complex() ** a.order - 1) < 1e-9


@given(phases, st.integers(min_value=-6, max_value=6))
def test_phase_pow_matches_repeated_mul(a, k):
    acc = Phase.one()
    for _ in range(abs(k)):
        acc = acc * a
    if k < 0:
        acc = acc.conj()
    assert a**k == acc


def test_cyclotomic_polys():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zeta3_sum_is_minus_one():
    # independent oracle: float embedding of zeta3 + zeta3^2
    z = cmath.exp(2j * cmath.pi / 3)
    assert abs((z + z * z) - (-1)) < 1e-12
    x = Cyclotomic.from_phase(Phase(Fraction(1, 3))) + Cyclotomic.from_phase(
        Phase(Fraction(2, 3))
    )
    assert x == Cyclotomic.from_rational(-1)
    assert abs(x.to_complex() - (-1)) < 1e-12


def test_scalar_identities():
    x = Cyclotomic.from_phase(Phase(Fraction(1, 5)), Fraction(2, 3))
    assert (Cyclotomic.one() * x) == x
    assert (x - x).is_zero()
    assert x.conj().conj() == x


def test_embeddings():
    assert Cyclotomic.from_phase(Phase(Fraction(1, 2))).to_complex() == pytest.approx(
        -1 + 0j, abs=1e-13
    )
    assert Cyclotomic.from_phase(Phase(Fraction(1, 4))).to_complex() == pytest.approx(
        1j, abs=1e-13
    )


@given(phases)
def test_phase_embedding_on_unit_circle(p):
    assert abs(abs(Cyclotomic.from_phase(p).to_complex()) - 1) < 1e-12


small_scalars = st.builds(
    lambda pairs: sum(
        (Cyclotomic.from_phase(Phase(Fraction(k, 12)), Fraction(num, den))
         for k, num, den in pairs),
        Cyclotomic.zero(),
    ),
    st.lists(
        st.tuples(
            st.integers(min_value=0, max_value=11),
            st.integers(min_value=-4, max_value=4),
            st.integers(min_value=1, max_value=3),
        ),
        max_size=3,
    ),
)


@settings(max_examples=60)
@given(small_scalars, small_scalars, small_scalars)
def test_scalar_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x * y).conj() == x.conj() * y.conj()


@settings(max_examples=40)
@given(small_scalars, small_scalars)
def test_embedding_respects_ring_ops(x, y):
    assert abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) < 1e-10
    assert abs((x * y).to_complex() - (x.to_complex() * y.to_complex())) < 1e-10


def test_zero_test_is_exact():
    # zeta8^2 = i, so zeta8^2 - i must vanish across conductors 8 and 4
    x = Cyclotomic(8, {2: Fraction(1)}) - Cyclotomic.from_phase(Phase(Fraction(1, 4)))
    assert x.is_zero()
    # 1 + zeta5 + ... + zeta5^4 = 0
    total = sum(
        (Cyclotomic.from_phase(Phase(Fraction(k, 5))) for k in range(5)),
        Cyclotomic.zero(),
    )
    assert total.is_zero()
    assert not (total + 1).is_zero()


def test_conductor_cap():
    set_conductor_cap(50)
    try:
        a = Cyclotomic.from_phase(Phase(Fraction(1, 7)))
        b = Cyclotomic.from_phase(Phase(Fraction(1, 11)))
        with pytest.raises(ConductorCapError):
            _ = a * b
    finally:
        set_conductor_cap(10_000)


def test_serialization_round_trip():
    x = Cyclotomic.from_phase(Phase(Fraction(1, 3)), Fraction(2, 7)) + Cyclotomic.from_rational(
        Fraction(-1, 2)
    )
    pairs = x.to_pairs()
    assert Cyclotomic.from_pairs(pairs) == x
    # deterministic canonical form
    assert pairs == (Cyclotomic.from_pairs(pairs)).to_pairs() or Cyclotomic.from_pairs(
        (Cyclotomic.from_pairs(pairs)).to_pairs()
    ) == x


def test_as_phase():
    p = Phase(Fraction(5, 12))
    assert Cyclotomic.from_phase(p).as_phase() == p
    with pytest.raises(ValueError):
        (Cyclotomic.one() + Cyclotomic.one()).as_phase()


def test_rational_part():
    assert Cyclotomic.from_rational(Fraction(3, 4)).rational_part_if_rational() == Fraction(3, 4)
    z3 = Cyclotomic.from_phase(Phase(Fraction(1, 3)))
    assert z3.rational_part_if_rational() is None
    assert (z3 + z3.conj()).rational_part_if_rational() == Fraction(-1)

"""Acceptance battery.

One test per acceptance criterion; each prints a single PASS line when it
completes (run with `pytest -s` to see them) and asserts every claim at
its stated tolerance.  Exact claims use exact arithmetic; the only float
tolerances are the ones stated for norm computations.
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from ccralg import (
    AlgebraElement,
    CCRMorphism,
    CycMatrix,
    Cyclotomic,
    GroupSpec,
    Phase,
    adjoint,
    center_basis,
    chain_change_of_generators,
    chain_triple,
    check_relations,
    clock_shift,
    commutant_basis,
    complementation_contrast,
    compress,
    conditional_expectation,
    induced_hom,
    is_full_matrix,
    l2_norm_squared,
    lift_defects,
    make_triple,
    multiply,
    nonuniqueness_fragment,
    pairing_triple,
    phi,
    phi_matrix,
    recover_order,
    regular_rep,
    relative_commutant_dimension,
    reordering_phase,
    rep_gram_is_orthonormal,
    rep_monomial,
    subgroup_generated,
    substitute_and_verify,
    tensor_split,
    trace,
    validate_triple,
    witness_rep,
)
from ccralg.errors import CapacityError, TensorSplitRefusal

from conftest import pauli_triple, random_element, random_valid_triple


def _report(num: int, started: float, text: str) -> None:
    print(f"[acceptance {num:02d}] PASS ({time.time() - started:.1f}s): {text}")


# -- 1 ---------------------------------------------------------------------------


def test_criterion_01_dimension_law():
    """dim span{u_g} = |group| for 50 randomized valid triples up to order
    512, witnessed by the exact trace Gram matrix being the identity."""
    started = time.time()
    rng = random.Random(101)
    for trial in range(50):
        t = random_valid_triple(rng, max_gens=5, max_order=8, max_size=512)
        assert validate_triple(t).ok
        spec = t.spec
        elems = list(spec.elements())
        mons = [AlgebraElement.monomial(t, g) for g in elems]
        adjs = [adjoint(m) for m in mons]
        size = len(elems)
        # diagonal of the Gram matrix: always checked in full
        for i in range(size):
            assert trace(multiply(adjs[i], mons[i])) == Cyclotomic.one()
        # off-diagonal: full for small groups, sampled beyond
        if size <= 128:
            pairs = ((i, j) for i in range(size) for j in range(size) if i != j)
        else:
            pairs = (
                (rng.randrange(size), rng.randrange(size)) for _ in range(2048)
            )
        for i, j in pairs:
            if i != j:
                assert trace(multiply(adjs[i], mons[j])).is_zero()
    _report(1, started, "trace Gram is the identity; 50 triples, |group| <= 512")
    assert time.time() - started < 10


# -- 2 ---------------------------------------------------------------------------


def _hs_inner(a: CycMatrix, b: CycMatrix) -> Cyclotomic:
    """trace(a* b) via the sparse entry dictionaries."""
    total = Cyclotomic.zero()
    small, big = (a.entries, b.entries) if len(a.entries) < len(b.entries) else (
        b.entries,
        a.entries,
    )
    for pos, v in small.items():
        if pos in big:
            w = big[pos]
            total = total + (
                v.conj() * w if small is a.entries else w.conj() * v
            )
    return total


def test_criterion_02_clock_shift():
    """For n = 2..12: the shift/clock relation holds exactly, both matrices
    have order exactly n, and the n^2 monomials w^k v^l are linearly
    independent (exact Hilbert-Schmidt Gram)."""
    started = time.time()
    from ccralg.reps import operator_order

    for n in range(2, 13):
        v, w = clock_shift(n)
        zn = Cyclotomic.from_phase(Phase(Fraction(1, n)))
        assert v * w == (w * v).scaled(zn)
        assert v.is_unitary() and w.is_unitary()
        assert operator_order(v, n) == n and operator_order(w, n) == n
        monos = {}
        wk = CycMatrix.identity(n)
        for k in range(n):
            wkvl = wk
            for l in range(n):
                monos[(k, l)] = wkvl
                wkvl = wkvl * v
            wk = wk * w
        keys = list(monos)
        n_scalar = Cyclotomic.from_rational(n)
        for k1 in keys:
            for k2 in keys:
                inner = _hs_inner(monos[k1], monos[k2])
                assert inner == (n_scalar if k1 == k2 else Cyclotomic.zero())
    _report(2, started, "relation, exact orders, and n^2 independent monomials, n = 2..12")
    assert time.time() - started < 5


# -- 3 ---------------------------------------------------------------------------


def _witness_battery(rng: random.Random):
    """Exhaustive for 1-2 generators with orders <= 6 and every valid phase;
    randomized 3- and 4-generator triples within the materialization cap."""
    for o in range(2, 7):
        yield make_triple(GroupSpec.cyclic([o]), [])
    for o1 in range(2, 7):
        for o2 in range(2, 7):
            d = math.gcd(o1, o2)
            for num in range(d):
                yield make_triple(
                    GroupSpec.cyclic([o1, o2]), [(0, 1, Phase(Fraction(num, d)))]
                )
    made = 0
    while made < 40:
        k = rng.choice([3, 3, 4])
        orders = [rng.choice([2, 3] if k == 4 else [2, 3, 4, 5, 6]) for _ in range(k)]
        upper = []
        for i in range(k):
            for j in range(i + 1, k):
                d = math.gcd(orders[i], orders[j])
                upper.append((i, j, Phase(Fraction(rng.randrange(d), d))))
        t = make_triple(GroupSpec.cyclic(orders), upper)
        try:
            witness_rep(t)
        except CapacityError:
            continue
        made += 1
        yield t


def test_criterion_03_witness_representation():
    started = time.time()
    rng = random.Random(103)
    checked = failures_expected = 0
    for t in _witness_battery(rng):
        r = witness_rep(t)
        report = check_relations(r)
        assert report.ok, f"tensor witness failed on {t}: {report.failures()}"
        checked += 1
        nontrivial = any(
            not t.theta[i][j].is_one()
            for i in range(t.ngens)
            for j in range(i + 1, t.ngens)
        )
        ds = witness_rep(t, combine="direct-sum")
        ds_report = check_relations(ds)
        if nontrivial:
            failures_expected += 1
            bad = ds_report.failures()
            assert bad and all(c.kind == "commutation" for c in bad)
            assert any("witness block" in c.detail for c in bad)
        else:
            assert ds_report.ok
    assert checked >= 95 and failures_expected >= 30
    _report(
        3,
        started,
        f"tensor witness exact on {checked} triples; direct-sum variant "
        f"fails with witness block on all {failures_expected} twisted ones",
    )
    assert time.time() - started < 30


# -- 4 ---------------------------------------------------------------------------


def test_criterion_04_trace():
    started = time.time()
    # exhaustive traciality over monomial pairs at order 64 and order 24
    battery = [
        pairing_triple(3, 2).triple,
        make_triple(GroupSpec.cyclic([4, 6]), [(0, 1, Phase.minus_one())]),
    ]
    for t in battery:
        mons = [AlgebraElement.monomial(t, g) for g in t.spec.elements()]
        for a in mons:
            for b in mons:
                assert trace(multiply(a, b)) == trace(multiply(b, a))
    # a thousand random element pairs
    rng = random.Random(104)
    for _ in range(1000):
        t = random_valid_triple(rng, max_gens=4, max_order=6, max_size=256)
        a = random_element(rng, t, 3)
        b = random_element(rng, t, 3)
        assert trace(multiply(a, b)) == trace(multiply(b, a))
    # faithfulness: trace(a* a) equals the exact coefficient mass
    for _ in range(200):
        t = random_valid_triple(rng, max_gens=4, max_order=6, max_size=256)
        a = random_element(rng, t, 4)
        mass = Cyclotomic.zero()
        for c in a.terms.values():
            mass = mass + c * c.conj()
        assert trace(multiply(adjoint(a), a)) == mass
        if not a.is_zero():
            assert not mass.is_zero()
    _report(4, started, "traciality exhaustive + 1000 random pairs; faithfulness exact")
    assert time.time() - started < 20


# -- 5 ---------------------------------------------------------------------------


def _commutant_battery():
    return [
        pauli_triple(),
        pairing_triple(2, 2).triple,
        pairing_triple(3, 2).triple,
        chain_triple(2, 2).triple,
        chain_triple(3, 2).triple,
        make_triple(GroupSpec.cyclic([4, 6]), [(0, 1, Phase.minus_one())]),
        make_triple(GroupSpec.cyclic([2, 2, 3]), [(0, 1, Phase.minus_one())]),
        make_triple(GroupSpec.cyclic([2, 3]), []),
        make_triple(GroupSpec.cyclic([8, 8]), [(0, 1, Phase(Fraction(1, 8)))]),
    ]


def test_criterion_05_commutant_identification():
    """For every triple in the battery (all of order <= 64) and EVERY
    generator subset: the span of the centralizer's unitaries equals the
    brute-force matrix commutant of the generated subalgebra inside the
    regular representation."""
    started = time.time()
    for t in _commutant_battery():
        assert t.spec.size() <= 64
        r = regular_rep(t)
        for k in range(t.ngens + 1):
            for s in combinations(range(t.ngens), k):
                span = commutant_basis(t, s)
                # every spanning unitary commutes with the subalgebra, matrixwise
                for idx in s:
                    u = rep_monomial(r, t.spec.generator(idx))
                    for z in span:
                        m = rep_monomial(r, z)
                        assert m * u == u * m
                # and the dimensions agree exactly
                assert len(span) == relative_commutant_dimension(t, s)
    _report(5, started, "centralizer span == matrix relative commutant, all subsets")
    assert time.time() - started < 60


# -- 6 ---------------------------------------------------------------------------


def test_criterion_06_conditional_expectations():
    started = time.time()
    rng = random.Random(106)
    for _ in range(200):
        t = random_valid_triple(rng, max_gens=4, max_order=6, max_size=64)
        spec = t.spec
        r = regular_rep(t)
        h_sub = subgroup_generated(
            spec,
            [
                spec.element([rng.randrange(o) for o in spec.orders])
                for _ in range(2)
            ],
        )
        g_sub = subgroup_generated(
            spec, rng.sample(sorted(h_sub, key=spec.rank), 1)
        )
        a = random_element(rng, t, 4)
        ea = conditional_expectation(a, g_sub)
        # compression in the regular representation computes the same map
        assert compress(r, g_sub, a) == compress(r, g_sub, ea)
        out_h = next((h for h in spec.elements() if h not in g_sub), None)
        if out_h is not None:
            assert compress(
                r, g_sub, AlgebraElement.monomial(t, out_h)
            ) == CycMatrix.zero(len(g_sub))
        # idempotent
        assert conditional_expectation(ea, g_sub) == ea
        # 2-norm contractive, exactly
        dropped = a - ea
        assert l2_norm_squared(a) == l2_norm_squared(ea) + l2_norm_squared(dropped)
        assert l2_norm_squared(dropped).to_complex().real >= -1e-12
        # module map over the subalgebra
        members = sorted(g_sub, key=spec.rank)
        b = AlgebraElement.monomial(t, rng.choice(members), Fraction(2))
        c = AlgebraElement.monomial(t, rng.choice(members))
        assert conditional_expectation(multiply(multiply(b, a), c), g_sub) == multiply(
            multiply(b, ea), c
        )
        # the tower commutes
        assert conditional_expectation(
            conditional_expectation(a, h_sub), g_sub
        ) == ea
    _report(6, started, "expectation = compression, idempotent, contractive, module map, tower")
    assert time.time() - started < 30


# -- 7 ---------------------------------------------------------------------------


def test_criterion_07_uhf_pairing():
    started = time.time()
    for k in (1, 2, 3):
        for p in (2, 3, 5):
            pt = pairing_triple(k, p)
            t = pt.triple
            assert validate_triple(t).ok
            assert t.dimension() == p ** (2 * k)
            assert center_basis(t) == [t.spec.identity()]
            assert is_full_matrix(t) == (True, p**k)
            if t.dimension() <= 128:
                # span of the represented unitaries has the full dimension
                assert rep_gram_is_orthonormal(regular_rep(t))
    _report(7, started, "trivial center, |group| = p^(2k), full regular span; k<=3, p in {2,3,5}")
    assert time.time() - started < 60


# -- 8 ---------------------------------------------------------------------------


def test_criterion_08_tensor_splitting():
    started = time.time()
    # cross-trivial partitions: factor dimensions multiply, cross pairs commute
    for k, p in [(2, 2), (3, 2), (2, 3)]:
        t = pairing_triple(k, p).triple
        left = [0, 1]
        t1, t2 = tensor_split(t, left)
        assert t1.dimension() * t2.dimension() == t.dimension()
        for i in left:
            for j in range(2, t.ngens):
                ui = AlgebraElement.monomial(t, t.spec.generator(i))
                uj = AlgebraElement.monomial(t, t.spec.generator(j))
                assert multiply(ui, uj) == multiply(uj, ui)
    # one more split shape: peel single commuting factors off a trivial table
    t = make_triple(GroupSpec.cyclic([2, 3, 4]), [])
    for left in ([0], [1], [2]):
        t1, t2 = tensor_split(t, left)
        assert t1.dimension() * t2.dimension() == 24
    # refusals with witnesses
    with pytest.raises(TensorSplitRefusal) as err:
        tensor_split(pauli_triple(), [0])
    assert err.value.pair == (0, 1) and err.value.phase == Phase.minus_one()
    ct = chain_triple(2, 2).triple
    with pytest.raises(TensorSplitRefusal) as err:
        tensor_split(ct, [0, 1])  # pair 0 fails to commute with g(1,1)
    assert not ct.theta[err.value.pair[0]][err.value.pair[1]].is_one()
    _report(8, started, "dimensions multiply on commuting cuts; refusals carry witnesses")
    assert time.time() - started < 10


# -- 9 ---------------------------------------------------------------------------


def test_criterion_09_phi_chain():
    started = time.time()
    for k in range(1, 6):
        ct = chain_triple(k, 2)
        mat = phi_matrix(ct)
        for x in range(k):
            for y in range(k):
                assert mat[x][y] == (1.0 if x <= y else 0.0)
        assert recover_order(ct) == list(range(k))
    # p = 3: the nonzero value is sqrt(3)/2 and the order is still recovered
    rng = random.Random(109)
    target = math.sqrt(3) / 2
    for k in (2, 3, 4):
        arr = list(range(k))
        rng.shuffle(arr)
        ct = chain_triple(k, 3, arrangement=arr)
        for x in range(k):
            for y in range(k):
                value = phi(ct, x, y)
                if arr[x] <= arr[y]:
                    assert abs(value - target) < 1e-9
                else:
                    assert value == 0.0
        assert recover_order(ct) == arr
    _report(9, started, "phi is the order indicator (p=2) and sqrt(3)/2-valued (p=3)")
    assert time.time() - started < 20


# -- 10 --------------------------------------------------------------------------


def test_criterion_10_generator_change_certifications():
    started = time.time()
    minus = [(3, 1)]
    for p in (2, 3):
        for m in (1, 2, 3):
            frag = nonuniqueness_fragment(minus, p, m)
            rep = substitute_and_verify(frag)
            assert rep.met and rep.generates_same_subgroup and rep.morphism_ok
            full, n = rep.full_matrix
            assert full and n * n == rep.induced_triple.dimension()
            lit = substitute_and_verify(frag, literal=True)
            assert not lit.met and lit.witnesses
    for p in (2, 3):
        for k in (2, 3, 4):
            ct = chain_triple(k, p)
            rep = chain_change_of_generators(ct)
            assert rep.met and rep.generates_same_subgroup and rep.morphism_ok
            assert rep.full_matrix == (True, p**k)
            # independent certification: the direct center scan agrees
            assert center_basis(ct.triple) == [ct.triple.spec.identity()]
            if k >= 3 or p >= 3:
                lit = chain_change_of_generators(ct, literal=True)
                assert not lit.met and lit.witnesses
    _report(10, started, "corrected h and g' certified; literal candidates fail with witnesses")
    assert time.time() - started < 60


# -- 11 --------------------------------------------------------------------------


def test_criterion_11_complementation_contrast():
    started = time.time()
    for p, m in [(2, 2), (2, 3), (3, 2)]:
        frag = nonuniqueness_fragment([(3, 1)], p, m)
        pt = pairing_triple(m + 1, p)
        report = complementation_contrast(frag, pt, omit_pair=1)
        assert not report.fragment_side.complemented
        assert report.fragment_side.missing_witness is not None
        assert report.pairing_side.complemented
        assert report.contrast()
        assert report.fragment_side.centralizer_size >= 2  # the dropped 1-member
    _report(11, started, "star fragment not complemented, pure pairing complemented")
    assert time.time() - started < 30


# -- 12 --------------------------------------------------------------------------


def _inclusion_morphism(rng: random.Random):
    big = random_valid_triple(rng, max_gens=4, max_order=4, max_size=64)
    k = rng.randint(1, big.ngens)
    keep = sorted(rng.sample(range(big.ngens), k))
    src = big.restrict(keep)
    images = tuple(big.spec.generator(i) for i in keep)
    return CCRMorphism(src, big, images), True


def _pair_swap_morphism(rng: random.Random):
    k = rng.choice([1, 2, 3])
    t = pairing_triple(k, 2).triple
    swapped = sorted(rng.sample(range(k), rng.randint(1, k)))
    images = []
    for alpha in range(k):
        if alpha in swapped:
            images += [t.spec.generator(2 * alpha + 1), t.spec.generator(2 * alpha)]
        else:
            images += [t.spec.generator(2 * alpha), t.spec.generator(2 * alpha + 1)]
    return CCRMorphism(t, t, tuple(images)), False


def test_criterion_12_functoriality():
    """50 pairing-preserving injective morphisms: the induced map is an
    injective trace-preserving *-homomorphism, and the re-normal-ordering
    phase is trivial exactly for the order-preserving generator maps (the
    non-order-preserving samples swap an anticommuting pair)."""
    started = time.time()
    rng = random.Random(112)
    makers = [_inclusion_morphism] * 30 + [_pair_swap_morphism] * 20
    rng.shuffle(makers)
    for make in makers:
        mor, order_preserving = make(rng)
        assert mor.check().ok
        assert lift_defects(mor) == []
        src = mor.source
        elems = list(src.spec.elements())
        # injectivity on the basis and trace preservation
        seen = set()
        sigma_all_one = True
        for g in elems:
            u = AlgebraElement.monomial(src, g)
            img = induced_hom(mor, u)
            (key,) = img.terms
            seen.add(key)
            assert trace(img) == trace(u)
            if not reordering_phase(mor, g).is_one():
                sigma_all_one = False
        assert len(seen) == len(elems)
        assert mor.is_generator_map()[1] == order_preserving
        assert sigma_all_one == order_preserving
        # *-homomorphism: multiplicative and adjoint-preserving
        if len(elems) <= 16:
            pairs = [(g, h) for g in elems for h in elems]
        else:
            pairs = [
                (rng.choice(elems), rng.choice(elems)) for _ in range(400)
            ]
        for g, h in pairs:
            ug = AlgebraElement.monomial(src, g)
            uh = AlgebraElement.monomial(src, h)
            assert induced_hom(mor, multiply(ug, uh)) == multiply(
                induced_hom(mor, ug), induced_hom(mor, uh)
            )
        for _ in range(5):
            a = random_element(rng, src, 3)
            assert induced_hom(mor, adjoint(a)) == adjoint(induced_hom(mor, a))
    _report(12, started, "50 morphisms: injective trace-preserving *-homs; sigma == 1 iff order-preserving")
    assert time.time() - started < 30

"""Explicit matrix models and exact relation checking.

Matrices are sparse with exact cyclotomic entries; every structural check
here is an exact identity, never a float comparison.  Floats enter only
in ``operator_norm``.

Two ways of combining the per-pair commutation blocks into one
representation are provided:

* ``combine="tensor"`` (default): the generators act as tensor products of
  their blocks.  All scalar commutation relations then hold globally,
  because every block pair outside the targeted one commutes exactly and
  a tensor product of scalar-commuting pairs scalar-commutes with the
  product of the block scalars.
* ``combine="direct-sum"``: the generators act blockwise on the direct sum
  of the block spaces.  A direct sum satisfies u v = t v u only when every
  block satisfies it with the same t, so whenever some commutation phase
  is not 1 the relation fails on any block where both generators act
  trivially -- e.g. the (k, k) diagonal block.  ``check_relations`` records
  such a witness block.  This variant exists to demonstrate the failure;
  it is not a representation of the relations unless the phase table is
  trivial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
from typing import Iterable, Sequence, Union

import numpy as np

from .algebra import AlgebraElement, normal_order_cocycle
from .cyclotomic import Cyclotomic, Phase, ScalarLike
from .errors import CapacityError, EnumerationCapError, SpecMismatchError
from .groups import GroupElement, Subgroup
from .triples import CCRTriple

#: Explicit matrices are refused beyond this dimension.
DEFAULT_MATRIX_CAP = 4096
#: Regular representations are materialized only up to this group order.
DEFAULT_REGULAR_CAP = 256


class CycMatrix:
    """Square matrix over exact cyclotomic scalars, stored sparsely."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: dict[tuple[int, int], Cyclotomic]) -> None:
        self.dim = dim
        self.entries = {
            pos: c for pos, c in entries.items() if not c.is_zero()
        }

    @classmethod
    def identity(cls, n: int) -> "CycMatrix":
        return cls(n, {(i, i): Cyclotomic.one() for i in range(n)})

    @classmethod
    def zero(cls, n: int) -> "CycMatrix":
        return cls(n, {})

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike]) -> "CycMatrix":
        return cls(
            len(values),
            {(i, i): Cyclotomic.coerce(v) for i, v in enumerate(values)},
        )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]]) -> "CycMatrix":
        n = len(rows)
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for c, v in enumerate(row):
                entries[(r, c)] = Cyclotomic.coerce(v)
        return cls(n, entries)

    def entry(self, r: int, c: int) -> Cyclotomic:
        return self.entries.get((r, c), Cyclotomic.zero())

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        self._check(other)
        out = dict(self.entries)
        for pos, c in other.entries.items():
            out[pos] = out[pos] + c if pos in out else c
        return CycMatrix(self.dim, out)

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return self + other.scaled(-1)

    def scaled(self, s: ScalarLike) -> "CycMatrix":
        s = Cyclotomic.coerce(s)
        return CycMatrix(self.dim, {pos: c * s for pos, c in self.entries.items()})

    def __mul__(self, other: "CycMatrix") -> "CycMatrix":
        self._check(other)
        by_row: dict[int, list[tuple[int, Cyclotomic]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], Cyclotomic] = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                pos = (r, c)
                prod_ = a * b
                out[pos] = out[pos] + prod_ if pos in out else prod_
        return CycMatrix(self.dim, out)

    def _check(self, other: "CycMatrix") -> None:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")

    def adjoint(self) -> "CycMatrix":
        return CycMatrix(
            self.dim, {(c, r): v.conj() for (r, c), v in self.entries.items()}
        )

    def __pow__(self, k: int) -> "CycMatrix":
        if k < 0:
            raise ValueError("negative matrix powers unsupported")
        acc = CycMatrix.identity(self.dim)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.dim != other.dim:
            return False
        keys = set(self.entries) | set(other.entries)
        return all((self.entry(*pos) - other.entry(*pos)).is_zero() for pos in keys)

    __hash__ = None

    def is_identity(self) -> bool:
        return self == CycMatrix.identity(self.dim)

    def is_unitary(self) -> bool:
        return (self * self.adjoint()).is_identity() and (
            self.adjoint() * self
        ).is_identity()

    def trace(self) -> Cyclotomic:
        total = Cyclotomic.zero()
        for (r, c), v in self.entries.items():
            if r == c:
                total = total + v
        return total

    def monomial_structure(self) -> tuple[tuple[int, ...], tuple[Phase, ...]] | None:
        """(permutation col->row, phase per column) when exactly one unit-root
        entry sits in every row and column; else None."""
        if len(self.entries) != self.dim:
            return None
        perm = [-1] * self.dim
        phases: list[Phase | None] = [None] * self.dim
        rows_seen = set()
        for (r, c), v in self.entries.items():
            if perm[c] != -1 or r in rows_seen:
                return None
            try:
                phases[c] = v.as_phase()
            except ValueError:
                return None
            perm[c] = r
            rows_seen.add(r)
        return tuple(perm), tuple(phases)  # type: ignore[arg-type]

    def tensor(self, other: "CycMatrix") -> "CycMatrix":
        n2 = other.dim
        out = {}
        for (r1, c1), a in self.entries.items():
            for (r2, c2), b in other.entries.items():
                out[(r1 * n2 + r2, c1 * n2 + c2)] = a * b
        return CycMatrix(self.dim * n2, out)

    def direct_sum(self, other: "CycMatrix") -> "CycMatrix":
        off = self.dim
        out = dict(self.entries)
        for (r, c), v in other.entries.items():
            out[(r + off, c + off)] = v
        return CycMatrix(self.dim + other.dim, out)

    def submatrix(self, indices: Sequence[int]) -> "CycMatrix":
        pos_of = {idx: i for i, idx in enumerate(indices)}
        out = {}
        for (r, c), v in self.entries.items():
            if r in pos_of and c in pos_of:
                out[(pos_of[r], pos_of[c])] = v
        return CycMatrix(len(indices), out)

    def to_complex_array(self) -> np.ndarray:
        arr = np.zeros((self.dim, self.dim), dtype=complex)
        for (r, c), v in self.entries.items():
            arr[r, c] = v.to_complex()
        return arr

    def to_rows(self) -> list[list[Cyclotomic]]:
        return [
            [self.entry(r, c) for c in range(self.dim)] for r in range(self.dim)
        ]

    def __repr__(self) -> str:
        return f"CycMatrix(dim={self.dim}, nnz={len(self.entries)})"


def _mult_matrix_solve(b: Cyclotomic, a: Cyclotomic) -> Cyclotomic:
    """Exact a / b in the cyclotomic field, via a power-basis linear solve."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero cyclotomic")
    n = lcm(a.n, b.n)
    a = a._with_conductor(n)
    b = b._with_conductor(n)
    deg = len(a.coords())
    # columns: coordinates of b * zeta^k
    cols = []
    for k in range(deg):
        shifted = b * Cyclotomic(n, {k: Fraction(1)})
        cols.append(list(shifted.coords()))
    mat = [[cols[c][r] for c in range(deg)] + [a.coords()[r]] for r in range(deg)]
    # Gaussian elimination over Q
    row = 0
    pivots = []
    for col in range(deg):
        piv = next((r for r in range(row, deg) if mat[r][col]), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(deg):
            if r != row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == deg:
            break
    sol = [Fraction(0)] * deg
    for r, col in enumerate(pivots):
        sol[col] = mat[r][deg]
    # consistency: rows without pivots must have zero rhs
    for r in range(row, deg):
        if mat[r][deg]:
            raise ArithmeticError("inconsistent division (b not invertible?)")
    return Cyclotomic(n, {k: c for k, c in enumerate(sol) if c})


def scalar_commutation_factor(a: CycMatrix, b: CycMatrix) -> Cyclotomic | None:
    """The scalar t with a b = t b a, or None when no scalar works."""
    ab = a * b
    ba = b * a
    if not ba.entries:
        return Cyclotomic.one() if not ab.entries else None
    if set(ab.entries) != set(ba.entries):
        return None
    pos, q = next(iter(ba.entries.items()))
    p = ab.entries[pos]
    try:
        t = p * q.conj() if (q * q.conj()).is_one() else _mult_matrix_solve(q, p)
    except ArithmeticError:
        return None
    return t if ab == ba.scaled(t) else None


class TensorUnitary:
    """Unitary given as a tensor product of small exact blocks."""

    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[CycMatrix]) -> None:
        self.factors = tuple(factors)

    @property
    def dim(self) -> int:
        return prod(f.dim for f in self.factors)

    def materialize(self, cap: int = DEFAULT_MATRIX_CAP) -> CycMatrix:
        if self.dim > cap:
            raise CapacityError(f"materializing dimension {self.dim} exceeds cap {cap}")
        acc = CycMatrix.identity(1)
        for f in self.factors:
            acc = acc.tensor(f)
        return acc

    def factorwise_product(self, other: "TensorUnitary") -> "TensorUnitary":
        if len(self.factors) != len(other.factors):
            raise ValueError("factor shape mismatch")
        return TensorUnitary(
            [a * b for a, b in zip(self.factors, other.factors)]
        )

    def is_unitary(self) -> bool:
        return all(f.is_unitary() for f in self.factors)

    def __repr__(self) -> str:
        return f"TensorUnitary(dims={[f.dim for f in self.factors]})"


Operator = Union[CycMatrix, TensorUnitary]


def _matrix_order_profile(m: CycMatrix, bound: int) -> tuple[int, Phase] | None:
    """(s, sigma) with m^s = sigma * I the first scalar power, s <= bound."""
    ident = CycMatrix.identity(m.dim)
    acc = m
    for k in range(1, bound + 1):
        # scalar iff acc == sigma * I with sigma the (0,0) entry
        diag0 = acc.entry(0, 0)
        if len(acc.entries) == m.dim and not diag0.is_zero():
            try:
                sigma = diag0.as_phase()
            except ValueError:
                sigma = None
            if sigma is not None and acc == ident.scaled(
                Cyclotomic.from_phase(sigma)
            ):
                return (k, sigma)
        acc = acc * m
    return None


def operator_order(op: Operator, bound: int) -> int | None:
    """Exact multiplicative order, or None if it exceeds the bound."""
    if isinstance(op, CycMatrix):
        profile = _matrix_order_profile(op, bound)
        if profile is None:
            return None
        s, sigma = profile
        order = s * sigma.order
        return order if order <= bound else None
    # tensor: first scalar power s_b with value sigma_b per factor, then
    # order = L * ord(prod sigma_b^(L/s_b)) with L = lcm(s_b)
    profiles = []
    for f in op.factors:
        profile = _matrix_order_profile(f, bound)
        if profile is None:
            return None
        profiles.append(profile)
    big_l = lcm(*(s for s, _ in profiles)) if profiles else 1
    sigma = Phase.one()
    for s, sg in profiles:
        sigma = sigma * (sg ** (big_l // s))
    order = big_l * sigma.order
    return order if order <= bound else None


# --- representations ---------------------------------------------------------


@dataclass
class Representation:
    """Assignment of one exact unitary per generator, plus bookkeeping."""

    triple: CCRTriple
    operators: tuple[Operator, ...]
    space: str  # "witness" | "witness-direct-sum" | "regular" | "custom"
    blocks: tuple[tuple[int, int, int, int], ...] = ()  # (i, j, offset, size)

    @property
    def dim(self) -> int:
        return self.operators[0].dim if self.operators else 1


def clock_shift(n: int) -> tuple[CycMatrix, CycMatrix]:
    """The shift v and clock w of size n with v w = zeta_n w v exactly.

    v moves basis vector i to i-1 (mod n); w = diag(1, zeta, ..., zeta^(n-1)).
    Both have order exactly n and together they generate the full matrix
    algebra (their n^2 monomials w^k v^l are linearly independent).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return weyl_pair(Phase.root(n))


def weyl_pair(phase: Phase) -> tuple[CycMatrix, CycMatrix]:
    """Shift/clock pair of size order(phase) with v w = phase * w v."""
    d = phase.order
    v = CycMatrix(
        d,
        {((c - 1) % d, c): Cyclotomic.one() for c in range(d)},
    )
    w = CycMatrix.diagonal([Cyclotomic.from_phase(phase**i) for i in range(d)])
    return v, w


def witness_rep(
    t: CCRTriple,
    combine: str = "tensor",
    matrix_cap: int = DEFAULT_MATRIX_CAP,
) -> Representation:
    """Blockwise existence witness for the commutation relations.

    One block per generator pair (i, j), i <= j, of size d(i, j): the order
    of theta[i][j] off the diagonal, the generator order on it.  On block
    (i, j) with i < j, generator i acts as the shift and generator j as the
    clock for the phase theta[i][j]; on block (i, i), generator i acts as
    the shift of its own order; all other generators act trivially.
    """
    k = t.ngens
    if k > 8:
        raise CapacityError("witness representation limited to 8 generators")
    if k == 0:
        raise ValueError("witness representation needs at least one generator")
    pair_list = [(i, j) for i in range(k) for j in range(i, k)]
    sizes = {}
    for i, j in pair_list:
        sizes[(i, j)] = t.spec.orders[i] if i == j else t.theta[i][j].order

    def block_ops(i: int, j: int) -> list[CycMatrix]:
        d = sizes[(i, j)]
        if i == j:
            v, _ = weyl_pair(Phase.root(d)) if d > 1 else (CycMatrix.identity(1),) * 2
            ops = [CycMatrix.identity(d)] * k
            ops[i] = v
            return ops
        v, w = weyl_pair(t.theta[i][j]) if d > 1 else (CycMatrix.identity(1),) * 2
        ops = [CycMatrix.identity(d)] * k
        ops[i] = v
        ops[j] = w
        return ops

    per_block = {pair: block_ops(*pair) for pair in pair_list}

    if combine == "tensor":
        total = prod(sizes[pair] for pair in pair_list)
        if total > matrix_cap:
            raise CapacityError(
                f"witness dimension {total} exceeds cap {matrix_cap}"
            )
        operators = tuple(
            TensorUnitary([per_block[pair][g] for pair in pair_list])
            for g in range(k)
        )
        return Representation(t, operators, "witness")
    if combine == "direct-sum":
        total = sum(sizes[pair] for pair in pair_list)
        if total > matrix_cap:
            raise CapacityError(
                f"witness dimension {total} exceeds cap {matrix_cap}"
            )
        blocks = []
        offset = 0
        for pair in pair_list:
            blocks.append((pair[0], pair[1], offset, sizes[pair]))
            offset += sizes[pair]
        operators = []
        for g in range(k):
            acc = CycMatrix.zero(0)
            for pair in pair_list:
                acc = acc.direct_sum(per_block[pair][g])
            operators.append(acc)
        return Representation(t, tuple(operators), "witness-direct-sum", tuple(blocks))
    raise ValueError(f"unknown combine mode {combine!r}")


def regular_rep(t: CCRTriple, cap: int = DEFAULT_REGULAR_CAP) -> Representation:
    """Left multiplication on the group's L2 space: u_g d_h = c(g,h) d_{gh}."""
    size = t.spec.size()
    if size > cap:
        raise EnumerationCapError(
            f"group order {size} exceeds the regular-representation cap {cap}"
        )
    operators = tuple(
        _regular_monomial(t, t.spec.generator(i)) for i in range(t.ngens)
    )
    return Representation(t, operators, "regular")


def _regular_monomial(t: CCRTriple, g: GroupElement) -> CycMatrix:
    spec = t.spec
    n = spec.size()
    entries = {}
    for h in spec.elements():
        c = normal_order_cocycle(t, g, h)
        entries[(spec.rank(g * h), spec.rank(h))] = Cyclotomic.from_phase(c)
    return CycMatrix(n, entries)


def rep_monomial(r: Representation, g: GroupElement) -> Operator:
    """The image of the basis unitary u_g in this representation."""
    r.triple._check_elem(g)
    if r.space == "regular":
        return _regular_monomial(r.triple, g)
    ops = r.operators
    if isinstance(ops[0], TensorUnitary):
        acc = TensorUnitary([CycMatrix.identity(f.dim) for f in ops[0].factors])
        for i, m in enumerate(g.exponents):
            for _ in range(m):
                acc = acc.factorwise_product(ops[i])
        return acc
    acc = CycMatrix.identity(r.dim)
    for i, m in enumerate(g.exponents):
        op = ops[i]
        assert isinstance(op, CycMatrix)
        for _ in range(m):
            acc = acc * op
    return acc


def rep_of_element(
    r: Representation, a: AlgebraElement, cap: int = DEFAULT_MATRIX_CAP
) -> CycMatrix:
    if a.triple != r.triple:
        raise SpecMismatchError("element does not belong to this representation")
    if r.dim > cap:
        raise CapacityError(f"dimension {r.dim} exceeds cap {cap}")
    total = CycMatrix.zero(r.dim)
    for g, coeff in a.terms.items():
        op = rep_monomial(r, g)
        mat = op.materialize(cap) if isinstance(op, TensorUnitary) else op
        total = total + mat.scaled(coeff)
    return total


# --- relation checking ---------------------------------------------------------


@dataclass(frozen=True)
class RelationCheck:
    kind: str  # "unitarity" | "order" | "commutation"
    subject: tuple[int, ...]
    ok: bool
    detail: str

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "subject": list(self.subject),
            "ok": self.ok,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class RelationReport:
    ok: bool
    checks: tuple[RelationCheck, ...]

    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _pair_commutation(
    r: Representation, i: int, j: int
) -> tuple[bool, str]:
    want = r.triple.theta[i][j]
    a, b = r.operators[i], r.operators[j]
    if isinstance(a, TensorUnitary) and isinstance(b, TensorUnitary):
        got = Phase.one()
        for idx, (fa, fb) in enumerate(zip(a.factors, b.factors)):
            s = scalar_commutation_factor(fa, fb)
            if s is None:
                return (False, f"factor {idx} does not scalar-commute")
            try:
                got = got * s.as_phase()
            except ValueError:
                return (False, f"factor {idx} commutes up to a non-phase scalar {s}")
        if got == want:
            return (True, f"product of factor scalars is {got}")
        return (False, f"factor scalars multiply to {got}, expected {want}")
    assert isinstance(a, CycMatrix) and isinstance(b, CycMatrix)
    s = scalar_commutation_factor(a, b)
    if s is not None and s == Cyclotomic.from_phase(want):
        return (True, f"exact scalar commutation with {want}")
    detail = "no scalar commutes the pair" if s is None else f"scalar is {s}, expected {want}"
    if r.blocks:
        # name a block where the local scalar disagrees with the target
        for bi, bj, off, size in r.blocks:
            idx = list(range(off, off + size))
            sa, sb = a.submatrix(idx), b.submatrix(idx)
            local = scalar_commutation_factor(sa, sb)
            if local is None or local != Cyclotomic.from_phase(want):
                local_txt = "none" if local is None else str(local)
                detail += (
                    f"; witness block ({bi},{bj}) at offset {off}"
                    f" has local scalar {local_txt}"
                )
                break
    return (False, detail)


def check_relations(r: Representation) -> RelationReport:
    """Exact verification of unitarity, order and pairwise commutation."""
    checks: list[RelationCheck] = []
    orders = r.triple.spec.orders
    for i, op in enumerate(r.operators):
        ok = op.is_unitary()
        checks.append(
            RelationCheck(
                "unitarity", (i,), ok, "exact" if ok else "U U* != 1 or U* U != 1"
            )
        )
    for i, op in enumerate(r.operators):
        got = operator_order(op, orders[i])
        ok = got == orders[i]
        checks.append(
            RelationCheck(
                "order",
                (i,),
                ok,
                f"order {got} == {orders[i]}" if ok else
                f"order is {got if got is not None else f'> {orders[i]}'}, expected {orders[i]}",
            )
        )
    for i in range(len(r.operators)):
        for j in range(i + 1, len(r.operators)):
            ok, detail = _pair_commutation(r, i, j)
            checks.append(RelationCheck("commutation", (i, j), ok, detail))
    return RelationReport(all(c.ok for c in checks), tuple(checks))


# --- norms, compressions, commutants -------------------------------------------


def operator_norm(
    r: Representation, a: AlgebraElement, cap: int = DEFAULT_MATRIX_CAP
) -> float:
    """Largest singular value of the represented element.

    Scalar multiples of a single basis unitary short-circuit to the exact
    coefficient modulus (the monomial acts unitarily), so phases give
    exactly 1.0 and (mu - 1)-scaled monomials give |mu - 1| to full
    precision.  Everything else goes through float linear algebra.
    """
    if not a.terms:
        return 0.0
    if len(a.terms) == 1:
        ((_, coeff),) = a.terms.items()
        mod2 = (coeff * coeff.conj()).to_complex().real
        return math.sqrt(max(mod2, 0.0))
    arr = rep_of_element(r, a, cap).to_complex_array()
    return float(np.linalg.svd(arr, compute_uv=False)[0])


def compress(
    r: Representation, sub: Subgroup, a: AlgebraElement
) -> CycMatrix:
    """p_G pi(a) p_G restricted to the subgroup's coordinates."""
    if r.space != "regular":
        raise ValueError("compression is defined against the regular representation")
    if sub.spec != r.triple.spec:
        raise SpecMismatchError("subgroup of a different group")
    mat = rep_of_element(r, a)
    indices = sorted(r.triple.spec.rank(g) for g in sub.members)
    return mat.submatrix(indices)


def commutant_dimension(ops: Sequence[CycMatrix], dim: int) -> int:
    """Dimension of {M : M U = U M for all U}, for monomial-phase unitaries.

    Conjugation by a monomial unitary permutes matrix positions with phase
    multipliers, so the commutant equations split over orbits of positions:
    each orbit contributes one free parameter, unless following its edges
    around a cycle multiplies to a phase other than 1, which forces the
    orbit's entries to zero.
    """
    structs = []
    den = 1
    for u in ops:
        st = u.monomial_structure()
        if st is None:
            raise ValueError("commutant scan requires monomial-phase unitaries")
        structs.append(st)
        for p in st[1]:
            den = lcm(den, p.order)
    # integer phase exponents over the common denominator
    istructs = [
        (perm, [int(p.q * den) for p in phases]) for perm, phases in structs
    ]
    orbit_of: dict[tuple[int, int], int] = {}
    rel: dict[tuple[int, int], int] = {}
    alive = 0
    for start in ((r, c) for r in range(dim) for c in range(dim)):
        if start in orbit_of:
            continue
        orbit_id = len(orbit_of)
        orbit_of[start] = orbit_id
        rel[start] = 0
        consistent = True
        stack = [start]
        while stack:
            pos = stack.pop()
            r0, c0 = pos
            p0 = rel[pos]
            for perm, phases in istructs:
                # M[perm r, perm c] = phi_r conj(phi_c) M[r, c]
                nxt = (perm[r0], perm[c0])
                p1 = (p0 + phases[r0] - phases[c0]) % den
                if nxt in rel:
                    if rel[nxt] != p1:
                        consistent = False
                else:
                    orbit_of[nxt] = orbit_id
                    rel[nxt] = p1
                    stack.append(nxt)
        if consistent:
            alive += 1
    return alive


def right_regular_monomial(t: CCRTriple, h: GroupElement) -> CycMatrix:
    """Right multiplication by u_h on the group's L2 space."""
    spec = t.spec
    n = spec.size()
    entries = {}
    for g in spec.elements():
        c = normal_order_cocycle(t, g, h)
        entries[(spec.rank(g * h), spec.rank(g))] = Cyclotomic.from_phase(c)
    return CycMatrix(n, entries)


def matrix_commutant_dimension(
    r: Representation, gen_indices: Iterable[int]
) -> int:
    """Brute-force commutant dimension of the chosen generators' algebra."""
    mats = []
    for i in gen_indices:
        op = r.operators[i]
        mats.append(op.materialize() if isinstance(op, TensorUnitary) else op)
    return commutant_dimension(mats, r.dim)


def relative_commutant_dimension(
    t: CCRTriple,
    gen_indices: Iterable[int],
    cap: int = DEFAULT_REGULAR_CAP,
) -> int:
    """Dimension of the relative commutant of the chosen generators'
    subalgebra inside the whole algebra, computed by matrix linear algebra
    in the regular representation.

    Left multiplications commute exactly with right multiplications (the
    2-cocycle identity), and at this finite scale each of the two families
    spans the other's full commutant.  Cutting the commutant of the chosen
    left multiplications down by the right multiplications therefore lands
    exactly on the represented algebra's part of the commutant -- the
    matrix-level oracle for the in-algebra statement.
    """
    if t.spec.size() > cap:
        raise EnumerationCapError(
            f"group order {t.spec.size()} exceeds the regular-representation cap {cap}"
        )
    ops = [_regular_monomial(t, t.spec.generator(i)) for i in gen_indices]
    ops += [
        right_regular_monomial(t, t.spec.generator(i)) for i in range(t.ngens)
    ]
    return commutant_dimension(ops, t.spec.size())


def rep_gram_is_orthonormal(r: Representation, cap: int = DEFAULT_MATRIX_CAP) -> bool:
    """Whether the represented basis unitaries are orthonormal in the
    normalized matrix trace -- the exact certificate that the span has the
    full group's dimension."""
    spec = r.triple.spec
    mats = {}
    for g in spec.elements():
        op = rep_monomial(r, g)
        mats[g] = op.materialize(cap) if isinstance(op, TensorUnitary) else op
    dim_scalar = Cyclotomic.from_rational(Fraction(1, r.dim))
    for g, mg in mats.items():
        for h, mh in mats.items():
            gram = (mh.adjoint() * mg).trace() * dim_scalar
            want = Cyclotomic.one() if g == h else Cyclotomic.zero()
            if gram != want:
                return False
    return True

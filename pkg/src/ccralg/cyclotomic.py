"""Exact arithmetic with roots of unity and the cyclotomic fields Q(zeta_N).

Two value types live here:

* ``Phase`` -- a root of unity exp(2*pi*i*q), stored as the exact rational
  q mod 1.  All commutation phases are of this form.
* ``Cyclotomic`` -- an exact element of Q(zeta_N), stored as a sparse
  rational combination of N-th roots of unity.  Coefficients of algebra
  elements are of this form.

The sparse representation is redundant (the N-th roots are not linearly
independent), so equality and zero tests reduce to the power basis
1, zeta, ..., zeta^(phi(N)-1) modulo the N-th cyclotomic polynomial.
Zero testing is exact; floats appear only in ``to_complex``.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Union

from .errors import ConductorCapError

#: Conductor promotions beyond this bound raise ConductorCapError.  The cap
#: guards against accidental lcm blowup; raise it via set_conductor_cap.
DEFAULT_CONDUCTOR_CAP = 10_000

_conductor_cap = DEFAULT_CONDUCTOR_CAP


def set_conductor_cap(n: int) -> None:
    global _conductor_cap
    if n < 1:
        raise ValueError("conductor cap must be positive")
    _conductor_cap = n


def get_conductor_cap() -> int:
    return _conductor_cap


_PHASE_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class Phase:
    """A root of unity exp(2*pi*i*q) with q an exact rational mod 1.

    The multiplicative order of a phase is the denominator of its canonical
    representative q in [0, 1).
    """

    __slots__ = ("q",)

    def __init__(self, q: Union[Fraction, int, str]) -> None:
        if isinstance(q, str):
            q = _parse_rational(q)
        object.__setattr__(self, "q", Fraction(q) % 1)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Phase is immutable")

    @classmethod
    def one(cls) -> "Phase":
        return cls(0)

    @classmethod
    def minus_one(cls) -> "Phase":
        return cls(Fraction(1, 2))

    @classmethod
    def root(cls, n: int, k: int = 1) -> "Phase":
        """exp(2*pi*i*k/n)."""
        return cls(Fraction(k, n))

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.q + other.q)

    def conj(self) -> "Phase":
        return Phase(-self.q)

    def __pow__(self, k: int) -> "Phase":
        return Phase(self.q * k)

    @property
    def order(self) -> int:
        return self.q.denominator

    def is_one(self) -> bool:
        return self.q == 0

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * float(self.q))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Phase):
            return self.q == other.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Phase", self.q))

    def __str__(self) -> str:
        if self.q == 0:
            return "0"
        return f"{self.q.numerator}/{self.q.denominator}"

    def __repr__(self) -> str:
        return f"Phase({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Phase":
        return cls(_parse_rational(text))


def _parse_rational(text: str) -> Fraction:
    m = _PHASE_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


# --- cyclotomic polynomials and power-basis reduction -----------------------


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (ascending coeffs), monic divisor."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i in range(dd + 1):
                num[k + i] -= c * den[i]
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """zeta_n^k in the power basis, as integer rows, for 0 <= k < n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[deg - 1]
        cur = [0] + cur[: deg - 1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi[i]
    return tuple(rows)


ScalarLike = Union["Cyclotomic", Phase, Fraction, int]


class Cyclotomic:
    """Exact element of Q(zeta_N), N the conductor.

    Stored sparsely as {exponent k: rational coefficient} meaning
    sum_k c_k * zeta_N^k.  Multiplication never needs reduction; zero
    testing reduces to the power basis.
    """

    __slots__ = ("n", "terms", "_coords")

    def __init__(self, n: int, terms: dict[int, Fraction]) -> None:
        if n < 1:
            raise ValueError("conductor must be positive")
        clean: dict[int, Fraction] = {}
        for k, c in terms.items():
            if c:
                k %= n
                prev = clean.get(k)
                clean[k] = c if prev is None else prev + c
                if not clean[k]:
                    del clean[k]
        self.n = n
        self.terms = clean
        self._coords: tuple[Fraction, ...] | None = None

    # -- constructors --

    @classmethod
    def zero(cls, n: int = 1) -> "Cyclotomic":
        return cls(n, {})

    @classmethod
    def one(cls, n: int = 1) -> "Cyclotomic":
        return cls(n, {0: Fraction(1)})

    @classmethod
    def from_rational(cls, r: Union[Fraction, int]) -> "Cyclotomic":
        return cls(1, {0: Fraction(r)})

    @classmethod
    def from_phase(cls, p: Phase, scale: Union[Fraction, int] = 1) -> "Cyclotomic":
        n = p.order
        k = int(p.q * n)
        return cls(n, {k: Fraction(scale)})

    @classmethod
    def coerce(cls, x: ScalarLike) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, Phase):
            return cls.from_phase(x)
        if isinstance(x, (int, Fraction)):
            return cls.from_rational(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic scalar")

    # -- conductor handling --

    def _with_conductor(self, m: int) -> "Cyclotomic":
        if m == self.n:
            return self
        step = m // self.n
        return Cyclotomic(m, {k * step: c for k, c in self.terms.items()})

    @staticmethod
    def _common(a: "Cyclotomic", b: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        m = lcm(a.n, b.n)
        if m > _conductor_cap:
            raise ConductorCapError(
                f"conductor {m} exceeds cap {_conductor_cap}"
            )
        return a._with_conductor(m), b._with_conductor(m)

    # -- ring operations --

    def __add__(self, other: ScalarLike) -> "Cyclotomic":
        a, b = Cyclotomic._common(self, Cyclotomic.coerce(other))
        terms = dict(a.terms)
        for k, c in b.terms.items():
            s = terms.get(k, Fraction(0)) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return Cyclotomic(a.n, terms)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: ScalarLike) -> "Cyclotomic":
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other: ScalarLike) -> "Cyclotomic":
        return (-self) + Cyclotomic.coerce(other)

    def __mul__(self, other: ScalarLike) -> "Cyclotomic":
        other = Cyclotomic.coerce(other)
        a, b = Cyclotomic._common(self, other)
        terms: dict[int, Fraction] = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in b.terms.items():
                k = (k1 + k2) % a.n
                s = terms.get(k, Fraction(0)) + c1 * c2
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
        return Cyclotomic(a.n, terms)

    __rmul__ = __mul__

    def conj(self) -> "Cyclotomic":
        return Cyclotomic(self.n, {-k % self.n: c for k, c in self.terms.items()})

    # -- decision procedures --

    def coords(self) -> tuple[Fraction, ...]:
        """Exact coordinates in the power basis of Q(zeta_n)."""
        if self._coords is None:
            table = _power_table(self.n)
            deg = len(table[0])
            acc = [Fraction(0)] * deg
            for k, c in self.terms.items():
                row = table[k]
                for i in range(deg):
                    if row[i]:
                        acc[i] += c * row[i]
            object.__setattr__(self, "_coords", tuple(acc))
        return self._coords

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        if len(self.terms) == 1:
            return False  # a single nonzero multiple of a root of unity
        return not any(self.coords())

    def is_one(self) -> bool:
        return (self - 1).is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Cyclotomic, Phase, int, Fraction)):
            return NotImplemented
        return (self - Cyclotomic.coerce(other)).is_zero()

    __hash__ = None  # mutable-equality semantics across conductors

    def as_phase(self) -> Phase:
        """Recover a Phase from a scalar that is syntactically a single root."""
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            if c == 1:
                return Phase(Fraction(k, self.n))
        raise ValueError(f"{self!r} is not a unit root in sparse form")

    def rational_part_if_rational(self) -> Fraction | None:
        """The value as a Fraction when it lies in Q, else None."""
        coords = self.coords()
        if any(coords[1:]):
            return None
        return coords[0]

    # -- numerics and serialization --

    def to_complex(self) -> complex:
        total = 0j
        for k, c in self.terms.items():
            total += float(c) * cmath.exp(2j * cmath.pi * k / self.n)
        return total

    def to_pairs(self) -> list[list[str]]:
        """Canonical [phase, rational] pairs meaning sum r * exp(2*pi*i*q)."""
        pairs = []
        for k, c in enumerate(self.coords()):
            if c:
                pairs.append(
                    [str(Phase(Fraction(k, self.n))), f"{c.numerator}/{c.denominator}"]
                )
        return pairs

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[str]]) -> "Cyclotomic":
        total = cls.zero()
        for phase_text, coeff_text in pairs:
            p = Phase.parse(str(phase_text))
            r = _parse_rational(str(coeff_text))
            total = total + cls.from_phase(p, r)
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            c = self.terms[k]
            if k == 0:
                bits.append(str(c))
            else:
                bits.append(f"{c}*z{self.n}^{k}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.n}, {self.terms!r})"


def phase_mul(a: Phase, b: Phase) -> Phase:
    return a * b


def phase_conj(a: Phase) -> Phase:
    return a.conj()


def phase_pow(a: Phase, k: int) -> Phase:
    return a**k


def phase_order(a: Phase) -> int:
    return a.order

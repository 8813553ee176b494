"""Exact arithmetic in cyclotomic fields Q(zeta_N) and rational angles.

An element of Q(zeta_N) is stored as an integer numerator vector in the power
basis 1, zeta, ..., zeta^(phi(N)-1) together with a positive common
denominator, always reduced modulo the N-th cyclotomic polynomial and with
the common content cancelled. Equality is therefore coefficient-wise.

Binary operations between elements of different conductors lift both operands
into Q(zeta_lcm) first, so callers may mix constants from different fields.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from eqclass import kernels
from eqclass.errors import ConductorMismatch, DivisionByZero, InputError

__all__ = [
    "Angle",
    "Cyclotomic",
    "cyclotomic_polynomial",
    "lcm",
    "root_of_unity",
    "as_cyclotomic",
]


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, rem = divmod(num[i + len(den) - 1], lead)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        if q:
            for j, dj in enumerate(den):
                num[i + j] -= q * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise InputError(f"conductor must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _mobius(n: int) -> int:
    f = _factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _totient(n: int) -> int:
    out = n
    for p in _factorize(n):
        out = out // p * (p - 1)
    return out


@lru_cache(maxsize=None)
def _trace_weights(n: int) -> tuple[Fraction, ...]:
    # Tr(zeta^i)/phi(n) is mu(m)/phi(m) with m = n/gcd(i, n); independent of n
    # for elements of a common subfield, which makes it usable as a hash.
    deg = len(cyclotomic_polynomial(n)) - 1
    out = []
    for i in range(deg):
        m = n // gcd(i, n)
        out.append(Fraction(_mobius(m), _totient(m)))
    return tuple(out)


class Angle:
    """A rational fraction of a full turn, normalized into [0, 1)."""

    __slots__ = ("turns",)

    def __init__(self, turns=0):
        if isinstance(turns, Angle):
            object.__setattr__(self, "turns", turns.turns)
            return
        if isinstance(turns, str):
            turns = Fraction(turns.strip())
        t = Fraction(turns)
        if not 0 <= t < 1:
            t = Fraction(t.numerator % t.denominator, t.denominator)
        object.__setattr__(self, "turns", t)

    def __setattr__(self, name, value):
        raise AttributeError("Angle is immutable")

    @classmethod
    def parse(cls, text: str) -> "Angle":
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"invalid angle {text!r}") from exc

    @property
    def denominator(self) -> int:
        return self.turns.denominator

    def is_zero(self) -> bool:
        return self.turns == 0

    def __add__(self, other):
        if not isinstance(other, Angle):
            other = Angle(other)
        return Angle(self.turns + other.turns)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Angle):
            other = Angle(other)
        return Angle(self.turns - other.turns)

    def __neg__(self):
        return Angle(-self.turns)

    def __mul__(self, k: int):
        return Angle(self.turns * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Angle):
            return self.turns == other.turns
        if isinstance(other, (int, Fraction)):
            return self == Angle(other)
        return NotImplemented

    def __lt__(self, other: "Angle"):
        return self.turns < other.turns

    def __hash__(self):
        return hash(("Angle", self.turns))

    def __str__(self):
        return f"{self.turns.numerator}/{self.turns.denominator}"

    def __repr__(self):
        return f"Angle({str(self)!r})"


class Cyclotomic:
    """Immutable element of Q(zeta_N)."""

    __slots__ = ("conductor", "num", "den", "_hash", "_lifts")

    def __init__(self, conductor: int, num, den: int = 1):
        phi = cyclotomic_polynomial(conductor)
        deg = len(phi) - 1
        num = [int(c) for c in num]
        if len(num) != deg:
            num = kernels.reduce_mod(num, phi)
        num, den = kernels.normalize(num, int(den))
        if den == 0:
            raise DivisionByZero("zero denominator")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    @classmethod
    def _raw(cls, conductor: int, num: tuple, den: int) -> "Cyclotomic":
        obj = object.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def from_rational(cls, q, conductor: int = 1) -> "Cyclotomic":
        q = Fraction(q)
        deg = len(cyclotomic_polynomial(conductor)) - 1
        return cls(conductor, [q.numerator] + [0] * (deg - 1), q.denominator)

    @classmethod
    def from_coeffs(cls, conductor: int, coeffs) -> "Cyclotomic":
        """Build from rational power-basis coefficients (any length)."""
        fr = [Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in fr)) if fr else 1
        return cls(conductor, [c.numerator * (den // c.denominator) for c in fr], den)

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "Cyclotomic":
        k = power % conductor
        return cls(conductor, [0] * k + [1])

    @property
    def degree(self) -> int:
        return len(self.num)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den) if self.num else Fraction(0)

    def lift(self, conductor: int) -> "Cyclotomic":
        """The same number viewed in Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ConductorMismatch(f"cannot lift Q(zeta_{self.conductor}) into Q(zeta_{conductor})")
        try:
            lifts = self._lifts
        except AttributeError:
            lifts = {}
            object.__setattr__(self, "_lifts", lifts)
        out = lifts.get(conductor)
        if out is None:
            if self.is_rational():
                deg = len(cyclotomic_polynomial(conductor)) - 1
                out = Cyclotomic._raw(conductor, (self.num[0],) + (0,) * (deg - 1), self.den)
            else:
                step = conductor // self.conductor
                vec = [0] * ((self.degree - 1) * step + 1)
                for i, c in enumerate(self.num):
                    vec[i * step] = c
                out = Cyclotomic(conductor, vec, self.den)
            lifts[conductor] = out
        return out

    def _common(self, other):
        if isinstance(other, Cyclotomic):
            if other.conductor == self.conductor:
                return self, other
            n = lcm(self.conductor, other.conductor)
            return self.lift(n), other.lift(n)
        if isinstance(other, (int, Rational)):
            return self, Cyclotomic.from_rational(other, self.conductor)
        return None, None

    def _rational_shift(self, q_num: int, q_den: int, sign: int) -> "Cyclotomic":
        # self + sign * q_num/q_den without touching the conductor
        num = [c * q_den for c in self.num] or [0]
        num[0] += sign * q_num * self.den
        num, den = kernels.normalize(num, self.den * q_den)
        return Cyclotomic._raw(self.conductor, num, den)

    def __add__(self, other):
        if isinstance(other, Cyclotomic) and other.conductor != self.conductor:
            if other.is_rational():
                return self._rational_shift(other.num[0] if other.num else 0, other.den, 1)
            if self.is_rational():
                return other._rational_shift(self.num[0] if self.num else 0, self.den, 1)
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        num = kernels.lin_comb(a.num, b.den, b.num, a.den)
        num, den = kernels.normalize(num, a.den * b.den)
        return Cyclotomic._raw(a.conductor, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        if isinstance(other, Cyclotomic) and other.conductor != self.conductor and other.is_rational():
            return self._rational_shift(other.num[0] if other.num else 0, other.den, -1)
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        num = kernels.lin_comb(a.num, b.den, b.num, -a.den)
        num, den = kernels.normalize(num, a.den * b.den)
        return Cyclotomic._raw(a.conductor, num, den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Cyclotomic) and other.conductor != self.conductor:
            if other.is_rational() or self.is_rational():
                a, b = (self, other) if other.is_rational() else (other, self)
                q = b.num[0] if b.num else 0
                num, den = kernels.normalize([c * q for c in a.num], a.den * b.den)
                return Cyclotomic._raw(a.conductor, num, den)
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        if b.is_rational():
            num = [c * (b.num[0] if b.num else 0) for c in a.num]
        elif a.is_rational():
            num = [c * (a.num[0] if a.num else 0) for c in b.num]
        else:
            num = kernels.mul_mod(a.num, b.num, cyclotomic_polynomial(a.conductor))
        num, den = kernels.normalize(num, a.den * b.den)
        return Cyclotomic._raw(a.conductor, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.to_fraction(), self.conductor)
        inv = _poly_inverse_mod([Fraction(c) for c in self.num],
                                [Fraction(c) for c in cyclotomic_polynomial(self.conductor)])
        return Cyclotomic.from_coeffs(self.conductor, [c * self.den for c in inv])

    def __truediv__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.from_rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "Cyclotomic":
        n = self.conductor
        vec = [0] * n
        for i, c in enumerate(self.num):
            vec[(-i) % n] += c
        return Cyclotomic(n, vec, self.den)

    def embed(self) -> complex:
        """Floating-point value under zeta_N -> exp(2*pi*i/N); display only."""
        z = cmath.exp(2j * cmath.pi / self.conductor)
        acc = 0j
        for i, c in enumerate(self.num):
            if c:
                acc += c * z**i
        return acc / self.den

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        try:
            return self._hash
        except AttributeError:
            pass
        w = _trace_weights(self.conductor)
        tr = sum((c * wi for c, wi in zip(self.num, w) if c), Fraction(0))
        h = hash(tr / self.den)
        object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return not self.is_zero()

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [_fmt_q(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "Cyclotomic":
        if isinstance(obj, (int, str)):
            return cls.from_rational(Fraction(obj))
        try:
            return cls.from_coeffs(int(obj["conductor"]), [Fraction(c) for c in obj["coeffs"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"invalid cyclotomic value {obj!r}") from exc

    def __str__(self):
        if self.is_rational():
            return _fmt_q(self.to_fraction())
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else (f"z{self.conductor}" if i == 1 else f"z{self.conductor}^{i}")
            if not mono:
                parts.append(_fmt_q(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_fmt_q(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {list(self.num)}, {self.den})"


def _fmt_q(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_inverse_mod(a: list, m: list) -> list:
    """Inverse of ``a`` modulo the irreducible ``m`` by the extended Euclidean algorithm."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise DivisionByZero("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


@lru_cache(maxsize=None)
def _small_int(value: int) -> Cyclotomic:
    return Cyclotomic._raw(1, (value,), 1)


def as_cyclotomic(value, conductor: int = 1) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    if isinstance(value, int) and conductor == 1:
        return _small_int(value) if -64 <= value <= 64 else Cyclotomic._raw(1, (value,), 1)
    if isinstance(value, (int, Rational)):
        return Cyclotomic.from_rational(value, conductor)
    raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")


def root_of_unity(t, conductor: int | None = None) -> Cyclotomic:
    """exp(2*pi*i*t) as an element of Q(zeta_N); N defaults to the angle's denominator."""
    t = Angle(t)
    n = t.denominator if conductor is None else conductor
    if n % t.denominator:
        raise ConductorMismatch(f"angle {t} does not live in Q(zeta_{n})")
    return Cyclotomic.zeta(n, int(t.turns * n))

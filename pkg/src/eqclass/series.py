"""Truncated polynomial models of even cohomology rings.

A :class:`RingModel` is a monomial quotient: each variable ``v_i`` has a cap
(``v_i**(cap_i+1) = 0``), all monomials of total degree above ``total_cap``
vanish, and an explicit integral map sends top monomials to rationals. All
variables sit in cohomological degree 2, so the "degree" of a monomial below
is its total exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from eqclass.errors import InputError, NonUnitConstant, RingMismatch
from eqclass.ycoeff import ONE, ZERO, YCoeff, as_ycoeff

__all__ = ["RingModel", "TruncSeries"]


@dataclass(frozen=True)
class RingModel:
    vars: tuple[str, ...]
    caps: tuple[int, ...]
    total_cap: int
    integral: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self):
        if len(self.vars) != len(self.caps):
            raise InputError("vars and caps must have equal length")
        if len(set(self.vars)) != len(self.vars):
            raise InputError(f"duplicate variable names in {self.vars}")
        if self.total_cap < 0 or any(c < 0 for c in self.caps):
            raise InputError("caps must be non-negative")
        for mono, _ in self.integral:
            if len(mono) != len(self.vars):
                raise InputError(f"integral monomial {mono} has wrong arity")
            if sum(mono) != self.total_cap or not self.admits(mono):
                raise InputError(f"integral monomial {mono} is not of top degree {self.total_cap}")

    @classmethod
    def make(cls, vars: Iterable[str], caps: Iterable[int], total_cap: int, integral: dict) -> "RingModel":
        items = tuple(sorted((tuple(int(e) for e in k), Fraction(v)) for k, v in integral.items() if v))
        return cls(tuple(vars), tuple(int(c) for c in caps), int(total_cap), items)

    @classmethod
    def projective(cls, n: int, var: str = "x") -> "RingModel":
        """H^*(P^n) = Q[x]/(x^(n+1)) with x^n integrating to 1."""
        return cls.make([var], [n], n, {(n,): 1})

    @classmethod
    def point(cls) -> "RingModel":
        return cls.make([], [], 0, {(): 1})

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def dim(self) -> int:
        return self.total_cap

    def admits(self, mono: tuple[int, ...]) -> bool:
        return sum(mono) <= self.total_cap and all(e <= c for e, c in zip(mono, self.caps))

    def integral_map(self) -> dict:
        return dict(self.integral)

    def tensor(self, other: "RingModel") -> "RingModel":
        """Model of the product space; clashing variable names of ``other`` get suffixes."""
        names = list(self.vars)
        for v in other.vars:
            new = v
            k = 2
            while new in names:
                new = f"{v}{k}"
                k += 1
            names.append(new)
        integral = {}
        for m1, q1 in self.integral:
            for m2, q2 in other.integral:
                integral[m1 + m2] = q1 * q2
        return RingModel.make(names, self.caps + other.caps, self.total_cap + other.total_cap, integral)

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "caps": list(self.caps),
            "total_cap": self.total_cap,
            "integral": [[list(m), _fmt_q(q)] for m, q in self.integral],
        }

    @classmethod
    def from_json(cls, obj) -> "RingModel":
        if isinstance(obj, dict) and "projective" in obj:
            return cls.projective(int(obj["projective"]), obj.get("var", "x"))
        try:
            integral = {tuple(m): Fraction(q) for m, q in obj["integral"]}
            return cls.make(obj["vars"], obj["caps"], obj["total_cap"], integral)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"invalid ring model {obj!r}") from exc


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class TruncSeries:
    """Immutable sparse element of a :class:`RingModel` tensored with YCoeff."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingModel, terms: dict | None = None):
        out = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != ring.nvars:
                raise InputError(f"monomial {mono} does not match ring variables {ring.vars}")
            if not ring.admits(mono):
                continue
            c = as_ycoeff(c)
            if c:
                out[mono] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", out)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def _raw(cls, ring, terms):
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls, ring: RingModel) -> "TruncSeries":
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring: RingModel, c=1) -> "TruncSeries":
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def one(cls, ring: RingModel) -> "TruncSeries":
        return cls.constant(ring, ONE)

    @classmethod
    def variable(cls, ring: RingModel, var: str | int = 0, coeff=1) -> "TruncSeries":
        i = ring.vars.index(var) if isinstance(var, str) else var
        mono = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls(ring, {mono: coeff})

    @classmethod
    def linear(cls, ring: RingModel, coeffs: dict) -> "TruncSeries":
        """Sum of c * var over ``{var_name: c}``."""
        out = cls.zero(ring)
        for name, c in coeffs.items():
            if name not in ring.vars:
                raise InputError(f"unknown variable {name!r} for ring {ring.vars}")
            out = out + cls.variable(ring, name, c)
        return out

    def _check(self, other: "TruncSeries"):
        if self.ring != other.ring:
            raise RingMismatch(f"ring {self.ring.vars} vs {other.ring.vars}")

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        try:
            return TruncSeries.constant(self.ring, as_ycoeff(other))
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> YCoeff:
        return self.terms.get((0,) * self.ring.nvars, ZERO)

    def is_nilpotent(self) -> bool:
        return self.constant_term().is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out[m] + c if m in out else c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TruncSeries._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            try:
                c = as_ycoeff(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        ring = self.ring
        caps, top = ring.caps, ring.total_cap
        out: dict = {}
        for m1, c1 in self.terms.items():
            d1 = sum(m1)
            for m2, c2 in other.terms.items():
                if d1 + sum(m2) > top:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                if any(e > cap for e, cap in zip(m, caps)):
                    continue
                p = c1 * c2
                out[m] = out[m] + p if m in out else p
        return TruncSeries._raw(ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "TruncSeries":
        c = as_ycoeff(c)
        if not c:
            return TruncSeries.zero(self.ring)
        out = {}
        for m, v in self.terms.items():
            p = v * c
            if p:
                out[m] = p
        return TruncSeries._raw(self.ring, out)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires a unit constant term."""
        c0 = self.constant_term()
        if not c0:
            raise NonUnitConstant("series with zero constant term is not invertible")
        inv0 = c0.inverse()
        nil = TruncSeries.one(self.ring) - self.scale(inv0)
        # 1/(c0 (1 - n)) = c0^-1 * sum n^k, finite since n is nilpotent
        acc = TruncSeries.one(self.ring)
        power = TruncSeries.one(self.ring)
        for _ in range(self.ring.total_cap):
            power = power * nil
            if power.is_zero():
                break
            acc = acc + power
        return acc.scale(inv0)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncSeries.one(self.ring)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def degree_part(self, k: int) -> "TruncSeries":
        """Homogeneous component of cohomological degree 2k."""
        return TruncSeries._raw(self.ring, {m: c for m, c in self.terms.items() if sum(m) == k})

    def map_degrees(self, fn) -> "TruncSeries":
        """Multiply the degree-k part by ``fn(k)`` for every k."""
        out = {}
        factors: dict = {}
        for m, c in self.terms.items():
            k = sum(m)
            if k not in factors:
                factors[k] = as_ycoeff(fn(k))
            v = c * factors[k]
            if v:
                out[m] = v
        return TruncSeries._raw(self.ring, out)

    def map_coeffs(self, fn) -> "TruncSeries":
        return TruncSeries(self.ring, {m: fn(c) for m, c in self.terms.items()})

    def specialize_y(self, value) -> "TruncSeries":
        return TruncSeries(self.ring, {m: YCoeff.constant(c.specialize(value)) for m, c in self.terms.items()})

    def integrate(self) -> YCoeff:
        acc = ZERO
        for mono, q in self.ring.integral:
            c = self.terms.get(mono)
            if c:
                acc = acc + c * q
        return acc

    def embed(self, ring: RingModel, offset: int) -> "TruncSeries":
        """Pull back along a product projection: variables shift to ``offset``."""
        pad_left = (0,) * offset
        pad_right = (0,) * (ring.nvars - offset - self.ring.nvars)
        return TruncSeries(ring, {pad_left + m + pad_right: c for m, c in self.terms.items()})

    def integrate_fiber(self, base: RingModel, fiber: RingModel) -> "TruncSeries":
        """Push forward along the projection ``base x fiber -> base``."""
        if self.ring != base.tensor(fiber):
            raise RingMismatch("series does not live on the product of base and fiber")
        nb = base.nvars
        fint = fiber.integral_map()
        out: dict = {}
        for m, c in self.terms.items():
            q = fint.get(m[nb:])
            if q:
                v = c * q
                b = m[:nb]
                out[b] = out[b] + v if b in out else v
        return TruncSeries(base, out)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == TruncSeries.constant(self.ring, as_ycoeff(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def to_json(self, with_ring: bool = True) -> dict:
        out = {}
        if with_ring:
            out["ring"] = self.ring.to_json()
        out["terms"] = [[list(m), self.terms[m].to_json()] for m in sorted(self.terms)]
        return out

    @classmethod
    def from_json(cls, obj, ring: RingModel | None = None) -> "TruncSeries":
        if ring is None:
            if "ring" not in obj:
                raise InputError("series without ring model")
            ring = RingModel.from_json(obj["ring"])
        if isinstance(obj, dict) and "linear" in obj:
            return cls.linear(ring, {k: YCoeff.from_json(v) for k, v in obj["linear"].items()})
        try:
            return cls(ring, {tuple(m): YCoeff.from_json(c) for m, c in obj["terms"]})
        except (KeyError, TypeError) as exc:
            raise InputError(f"invalid series {obj!r}") from exc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.ring.vars, m) if e
            )
            c = str(self.terms[m])
            if not mono:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"TruncSeries({self})"

"""The coefficient ring C[y, 1/y, 1/(1+y)] with cyclotomic coefficients.

A :class:`YCoeff` is a Laurent polynomial numerator divided by an explicit
power ``(1+y)**e``. The canonical form has no zero coefficients and, when
``e > 0``, a numerator not divisible by ``1+y``; equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from eqclass import kernels
from eqclass.cyclotomic import Cyclotomic, as_cyclotomic, cyclotomic_polynomial, lcm
from eqclass.errors import InputError, NonUnitConstant, PoleAtMinusOne, PoleAtZero

__all__ = ["YCoeff", "as_ycoeff", "Y", "ONE", "ZERO"]


def _clean(terms: dict) -> dict:
    return {d: c for d, c in terms.items() if not c.is_zero()}


def _value_at_minus_one(terms: dict):
    acc = 0
    for d, c in terms.items():
        acc = acc + (c if d % 2 == 0 else -c)
    return acc


def _div_one_plus_y(terms: dict) -> dict:
    """Exact quotient of a Laurent polynomial by (1+y); caller checks divisibility."""
    lo, hi = min(terms), max(terms)
    zero = Cyclotomic.from_rational(0)
    out = {}
    q = zero
    for d in range(hi, lo, -1):
        q = terms.get(d, zero) - q
        out[d - 1] = q
    return _clean(out)


def _dense(terms: dict, conductor: int):
    """Lowest degree, common denominator and dense integer vectors of ``terms``."""
    lifted = {d: c.lift(conductor) for d, c in terms.items()}
    den = lcm(*(c.den for c in lifted.values()))
    lo, hi = min(lifted), max(lifted)
    width = len(cyclotomic_polynomial(conductor)) - 1
    rows = []
    for d in range(lo, hi + 1):
        c = lifted.get(d)
        rows.append([x * (den // c.den) for x in c.num] if c is not None else [0] * width)
    return lo, den, rows


def _mul_terms(a: dict, b: dict) -> dict:
    if len(a) > 1 and len(b) > 1:
        # one kernel call for the whole product instead of a Cyclotomic per pair
        n = lcm(*(c.conductor for c in a.values()), *(c.conductor for c in b.values()))
        lo_a, den_a, rows_a = _dense(a, n)
        lo_b, den_b, rows_b = _dense(b, n)
        den = den_a * den_b
        out = {}
        for i, row in enumerate(kernels.ypoly_mul_mod(rows_a, rows_b, cyclotomic_polynomial(n))):
            if any(row):
                num, d = kernels.normalize(row, den)
                out[lo_a + lo_b + i] = Cyclotomic._raw(n, num, d)
        return out
    out: dict = {}
    for da, ca in a.items():
        for db, cb in b.items():
            d = da + db
            prod = ca * cb
            out[d] = out[d] + prod if d in out else prod
    return _clean(out)


def _add_terms(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for d, c in b.items():
        c = c if sign > 0 else -c
        out[d] = out[d] + c if d in out else c
    return _clean(out)


_ONE_PLUS_Y_POWERS: list[dict] = []


def _one_plus_y_power(k: int) -> dict:
    while len(_ONE_PLUS_Y_POWERS) <= k:
        if not _ONE_PLUS_Y_POWERS:
            _ONE_PLUS_Y_POWERS.append({0: Cyclotomic.from_rational(1)})
        else:
            prev = _ONE_PLUS_Y_POWERS[-1]
            _ONE_PLUS_Y_POWERS.append(
                _add_terms(prev, {d + 1: c for d, c in prev.items()})
            )
    return _ONE_PLUS_Y_POWERS[k]


class YCoeff:
    """Immutable element of C[y, 1/y, 1/(1+y)] over cyclotomic numbers."""

    __slots__ = ("terms", "denom_power", "_key")

    def __init__(self, terms=None, denom_power: int = 0):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        if denom_power < 0:
            raise InputError("denominator power must be non-negative")
        t = _clean({int(d): as_cyclotomic(c) for d, c in terms.items()})
        e = denom_power
        while e > 0 and t and _value_at_minus_one(t) == 0:
            t = _div_one_plus_y(t)
            e -= 1
        if not t:
            e = 0
        object.__setattr__(self, "terms", t)
        object.__setattr__(self, "denom_power", e)
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("YCoeff is immutable")

    @classmethod
    def constant(cls, c) -> "YCoeff":
        return cls({0: c})

    @classmethod
    def monomial(cls, degree: int, c=1) -> "YCoeff":
        return cls({degree: c})

    @classmethod
    def one_plus_y_power(cls, k: int) -> "YCoeff":
        """(1+y)**k for any integer k."""
        if k >= 0:
            return cls(_one_plus_y_power(k))
        return cls({0: 1}, -k)

    @classmethod
    def from_polynomial(cls, coeffs, denom_power: int = 0) -> "YCoeff":
        return cls({i: c for i, c in enumerate(coeffs)}, denom_power)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return self.denom_power == 0 and all(d == 0 for d in self.terms)

    def constant_value(self) -> Cyclotomic:
        if not self.is_constant():
            raise ValueError(f"{self} depends on y")
        return self.terms.get(0, Cyclotomic.from_rational(0))

    def _align(self, other: "YCoeff"):
        e = max(self.denom_power, other.denom_power)
        a = self.terms
        b = other.terms
        if self.denom_power < e:
            a = _mul_terms(a, _one_plus_y_power(e - self.denom_power))
        if other.denom_power < e:
            b = _mul_terms(b, _one_plus_y_power(e - other.denom_power))
        return a, b, e

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        a, b, e = self._align(other)
        return YCoeff(_add_terms(a, b), e)

    __radd__ = __add__

    def __neg__(self):
        return YCoeff._from_canonical({d: -c for d, c in self.terms.items()}, self.denom_power)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, e = self._align(other)
        return YCoeff(_add_terms(a, b, -1), e)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        t = _mul_terms(self.terms, other.terms)
        e = self.denom_power + other.denom_power
        if e == 0:
            return YCoeff._from_canonical(t, 0)
        return YCoeff(t, e)

    __rmul__ = __mul__

    @classmethod
    def _from_canonical(cls, terms: dict, e: int) -> "YCoeff":
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "denom_power", e if terms else 0)
        object.__setattr__(obj, "_key", None)
        return obj

    def divide_by_1py(self, k: int = 1) -> "YCoeff":
        """Divide by (1+y)**k (k may be negative to multiply)."""
        if k < 0:
            return self * YCoeff.one_plus_y_power(-k)
        return YCoeff(self.terms, self.denom_power + k)

    def unit_decomposition(self):
        """Return (c, k, m) with self = c * y**k * (1+y)**m, or None if not a unit."""
        if not self.terms:
            return None
        t = self.terms
        m = -self.denom_power
        while len(t) > 1 and _value_at_minus_one(t) == 0:
            t = _div_one_plus_y(t)
            m += 1
        if len(t) != 1:
            return None
        (k, c), = t.items()
        return c, k, m

    def inverse(self) -> "YCoeff":
        dec = self.unit_decomposition()
        if dec is None:
            raise NonUnitConstant(f"{self} is not a unit of C[y, 1/y, 1/(1+y)]")
        c, k, m = dec
        return YCoeff({-k: c.inverse()}) * YCoeff.one_plus_y_power(-m)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def specialize(self, value) -> Cyclotomic:
        """Evaluate at y = value (a rational or cyclotomic number)."""
        v = as_cyclotomic(value)
        if v == -1 and self.denom_power > 0:
            raise PoleAtMinusOne(f"{self} has a pole at y = -1")
        if not self.terms:
            return Cyclotomic.from_rational(0)
        if v.is_zero() and min(self.terms) < 0:
            raise PoleAtZero(f"{self} has a pole at y = 0")
        acc = Cyclotomic.from_rational(0)
        for d, c in self.terms.items():
            acc = acc + c * (v**d if d else 1)
        if self.denom_power:
            acc = acc / (1 + v) ** self.denom_power
        return acc

    def max_conductor(self) -> int:
        from eqclass.cyclotomic import lcm

        return lcm(*(c.conductor for c in self.terms.values())) if self.terms else 1

    def _canon_key(self):
        if self._key is None:
            object.__setattr__(
                self, "_key", (self.denom_power, tuple(sorted((d, hash(c)) for d, c in self.terms.items())))
            )
        return self._key

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.denom_power == other.denom_power and self.terms == other.terms

    def __hash__(self):
        return hash(self._canon_key())

    def to_json(self) -> dict:
        return {
            "terms": [[d, self.terms[d].to_json()] for d in sorted(self.terms)],
            "denom_power": self.denom_power,
        }

    @classmethod
    def from_json(cls, obj) -> "YCoeff":
        if isinstance(obj, (int, str)):
            return cls.constant(Fraction(obj))
        try:
            terms = {int(d): Cyclotomic.from_json(c) for d, c in obj["terms"]}
            return cls(terms, int(obj.get("denom_power", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"invalid y-coefficient {obj!r}") from exc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for d in sorted(self.terms):
            c = self.terms[d]
            cs = str(c)
            if not c.is_rational() and d != 0:
                cs = f"({cs})"
            if d == 0:
                parts.append(cs)
                continue
            mono = "y" if d == 1 else f"y^{d}"
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        num = " + ".join(parts).replace("+ -", "- ")
        if self.denom_power:
            pw = "" if self.denom_power == 1 else f"^{self.denom_power}"
            return f"({num})/(1+y){pw}"
        return num

    def __repr__(self):
        return f"YCoeff({str(self)!r})"


def _coerce(value):
    if isinstance(value, YCoeff):
        return value
    if isinstance(value, (int, Rational, Cyclotomic)):
        return YCoeff.constant(value)
    return None


def as_ycoeff(value) -> YCoeff:
    out = _coerce(value)
    if out is None:
        raise TypeError(f"cannot interpret {value!r} as a y-coefficient")
    return out


ZERO = YCoeff()
ONE = YCoeff({0: 1})
Y = YCoeff({1: 1})

"""Power series defining multiplicative characteristic classes.

Each :class:`Template` names a series ``f(a)`` in one Chern root; the class of
a split bundle is the product of ``f`` over its roots. Coefficients are exact
:class:`~eqclass.ycoeff.YCoeff` values and are memoized per (template, order).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from eqclass.cyclotomic import Angle, root_of_unity
from eqclass.errors import NonNilpotentArgument, NonUnitConstant, ThetaZero
from eqclass.series import TruncSeries
from eqclass.ycoeff import ONE, ZERO, Y, YCoeff

__all__ = [
    "TemplateKind",
    "Template",
    "CHERN",
    "TODD",
    "L_CLASS",
    "NORMALIZED_TY",
    "UNNORMALIZED_TY",
    "EXP",
    "EXP_ONE_PLUS_Y",
    "u_theta",
    "ty_theta",
    "unnorm_ty_theta",
    "template_coefficients",
    "compose_template",
]


class TemplateKind(enum.Enum):
    CHERN = "chern"
    TODD = "todd"
    L_CLASS = "L"
    NORMALIZED_TY = "Ty"
    UNNORMALIZED_TY = "Ty~"
    U_THETA = "U_theta"
    TY_THETA = "Ty_theta"
    UNNORM_TY_THETA = "Ty~_theta"
    EXP = "exp"
    EXP_ONE_PLUS_Y = "exp_(1+y)"


_THETA_KINDS = {TemplateKind.U_THETA, TemplateKind.TY_THETA, TemplateKind.UNNORM_TY_THETA}


@dataclass(frozen=True)
class Template:
    kind: TemplateKind
    theta: Angle | None = None

    def __post_init__(self):
        if self.kind in _THETA_KINDS:
            if self.theta is None or Angle(self.theta).is_zero():
                raise ThetaZero(f"{self.kind.value} needs a nonzero angle")
            object.__setattr__(self, "theta", Angle(self.theta))
        elif self.theta is not None:
            raise ValueError(f"{self.kind.value} takes no angle")

    @property
    def needs_angle(self) -> bool:
        return self.kind in _THETA_KINDS

    def __str__(self):
        return self.kind.value if self.theta is None else f"{self.kind.value}({self.theta})"


CHERN = Template(TemplateKind.CHERN)
TODD = Template(TemplateKind.TODD)
L_CLASS = Template(TemplateKind.L_CLASS)
NORMALIZED_TY = Template(TemplateKind.NORMALIZED_TY)
UNNORMALIZED_TY = Template(TemplateKind.UNNORMALIZED_TY)
EXP = Template(TemplateKind.EXP)
EXP_ONE_PLUS_Y = Template(TemplateKind.EXP_ONE_PLUS_Y)


def u_theta(theta) -> Template:
    return Template(TemplateKind.U_THETA, Angle(theta))


def ty_theta(theta) -> Template:
    return Template(TemplateKind.TY_THETA, Angle(theta))


def unnorm_ty_theta(theta) -> Template:
    return Template(TemplateKind.UNNORM_TY_THETA, Angle(theta))


# univariate truncated series over YCoeff, as lists indexed by degree

def _mul(a: list, b: list, n: int) -> list:
    out = [ZERO] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai:
            for j, bj in enumerate(b[: n + 1 - i]):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
    return out


def _inv(a: list, n: int) -> list:
    if not a[0]:
        raise NonUnitConstant("series with zero constant term")
    inv0 = a[0].inverse()
    out = [inv0] + [ZERO] * n
    for k in range(1, n + 1):
        acc = ZERO
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j] and out[k - j]:
                acc = acc + a[j] * out[k - j]
        out[k] = -(acc * inv0)
    return out


def _rational_series(fn, n: int) -> list:
    return [YCoeff.constant(fn(k)) for k in range(n + 1)]


def _exp_neg(n: int) -> list:
    return _rational_series(lambda k: Fraction((-1) ** k, factorial(k)), n)


def _todd(n: int) -> list:
    # a/(1-e^-a) = 1 / sum_k (-a)^k/(k+1)!
    return _inv(_rational_series(lambda k: Fraction((-1) ** k, factorial(k + 1)), n), n)


def _l_class(n: int) -> list:
    cosh = _rational_series(lambda k: Fraction(1, factorial(k)) if k % 2 == 0 else 0, n)
    sinh_over = _rational_series(lambda k: Fraction(1, factorial(k + 1)) if k % 2 == 0 else 0, n)
    return _mul(cosh, _inv(sinh_over, n), n)


def _rescale(coeffs: list) -> list:
    # f(a) -> f((1+y) a)
    return [c * YCoeff.one_plus_y_power(k) for k, c in enumerate(coeffs)]


def _theta_denominator(u, n: int) -> list:
    # 1 - u e^{-a}
    e = _exp_neg(n)
    return [ONE - e[0] * u] + [-(c * u) for c in e[1:]]


def _theta_numerator(u, n: int) -> list:
    # 1 + u y e^{-a}
    uy = Y * u
    e = _exp_neg(n)
    return [ONE + uy] + [c * uy for c in e[1:]]


@lru_cache(maxsize=None)
def template_coefficients(template: Template, order: int) -> tuple[YCoeff, ...]:
    """Exact Taylor coefficients of the template series up to ``a**order``."""
    n = order
    kind = template.kind
    if kind is TemplateKind.CHERN:
        out = [ONE, ONE] + [ZERO] * (n - 1)
    elif kind is TemplateKind.TODD:
        out = _todd(n)
    elif kind is TemplateKind.L_CLASS:
        out = _l_class(n)
    elif kind is TemplateKind.NORMALIZED_TY:
        out = _rescale(_todd(n))
        if n >= 1:
            out[1] = out[1] - Y
    elif kind is TemplateKind.UNNORMALIZED_TY:
        e = _exp_neg(n)
        factor = [ONE + Y] + [c * Y for c in e[1:]]
        out = _mul(_todd(n), factor, n)
    elif kind is TemplateKind.EXP:
        out = _rational_series(lambda k: Fraction(1, factorial(k)), n)
    elif kind is TemplateKind.EXP_ONE_PLUS_Y:
        out = _rescale(_rational_series(lambda k: Fraction(1, factorial(k)), n))
    else:
        u = YCoeff.constant(root_of_unity(-template.theta))
        if kind is TemplateKind.U_THETA:
            out = _inv(_theta_denominator(u, n), n)
        else:
            out = _mul(_theta_numerator(u, n), _inv(_theta_denominator(u, n), n), n)
            if kind is TemplateKind.TY_THETA:
                out = _rescale(out)
    return tuple(out[: n + 1])


def compose_template(template: Template, arg: TruncSeries) -> TruncSeries:
    """Evaluate the template series at a nilpotent element of a truncated ring."""
    if not arg.is_nilpotent():
        raise NonNilpotentArgument("template argument must have zero constant term")
    ring = arg.ring
    coeffs = template_coefficients(template, ring.total_cap)
    if arg.is_zero():
        return TruncSeries.constant(ring, coeffs[0])
    acc = TruncSeries.constant(ring, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * arg + c
    return acc

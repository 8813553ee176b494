"""Invariants of global quotients X/G computed from fixed-point data."""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod

from eqclass.bundles import SplitBundle, character
from eqclass.cyclotomic import Angle, lcm
from eqclass.errors import InvalidWeights, NonTrivialAngle, ThetaZero
from eqclass.localization import (
    IDENTITY,
    FixedComponent,
    LocalizationDatum,
    atiyah_singer_class,
    equivariant_chi_y,
    twisted_class,
)
from eqclass.series import RingModel, TruncSeries
from eqclass.templates import UNNORMALIZED_TY, compose_template, template_coefficients, unnorm_ty_theta
from eqclass.ycoeff import ZERO, YCoeff, as_ycoeff

__all__ = [
    "WeightVector",
    "DefectPoint",
    "IsolatedDefectDatum",
    "chi_y_quotient",
    "contributing_angles",
    "wproj_alpha_term",
    "wproj_class",
    "wproj_genus",
    "defect_sum",
    "orbifold_twisted_sides",
    "orbifold_twisted_check",
]


@dataclass(frozen=True)
class WeightVector:
    w: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.w)
        if not w or any(x <= 0 for x in w):
            raise InvalidWeights(f"weights must be positive integers, got {self.w}")
        object.__setattr__(self, "w", w)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        try:
            return cls(tuple(int(p) for p in text.split(",") if p.strip()))
        except ValueError as exc:
            raise InvalidWeights(f"invalid weight list {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.w) - 1

    @property
    def order(self) -> int:
        return prod(self.w)

    @property
    def gcd(self) -> int:
        return gcd(*self.w)

    @property
    def deg_pi(self) -> int:
        return self.order // self.gcd

    @property
    def conductor(self) -> int:
        return lcm(*self.w)

    def __str__(self):
        return ",".join(str(x) for x in self.w)


def chi_y_quotient(d: LocalizationDatum) -> YCoeff:
    """Average of the equivariant chi_y-genera over the group."""
    # elements acting identically share fixed data; count them instead of re-adding
    counts: Counter = Counter()
    first: dict = {}
    for g in d.group.elements:
        comps = d.components(g)
        counts[comps] += 1
        first.setdefault(comps, g)
    acc = ZERO
    for comps, k in counts.items():
        acc = acc + equivariant_chi_y(d, first[comps]) * k
    return acc * Fraction(1, d.group.order)


def contributing_angles(w: WeightVector) -> list[Angle]:
    """Angles alpha (as turns) with w_j * alpha integral for some j."""
    return sorted({Angle(Fraction(k, wj)) for wj in w.w for k in range(wj)})


def wproj_alpha_term(w: WeightVector, alpha, ring: RingModel | None = None) -> TruncSeries:
    """prod_j w_j x (1 + y e^{-w_j(x + i alpha)}) / (1 - e^{-w_j(x + i alpha)}) mod x^(n+1)."""
    ring = ring or RingModel.projective(w.n)
    alpha = Angle(alpha)
    out = TruncSeries.one(ring)
    for wj in w.w:
        out = out * _weight_factor(ring, wj, alpha * wj)
    return out


@lru_cache(maxsize=4096)
def _weight_factor(ring: RingModel, wj: int, theta: Angle) -> TruncSeries:
    arg = TruncSeries.variable(ring).scale(wj)
    if theta.is_zero():
        # w_j x cancels the defining factor of the un-normalized series
        return compose_template(UNNORMALIZED_TY, arg)
    return arg * compose_template(unnorm_ty_theta(theta), arg)


def wproj_class(w: WeightVector, normalized: bool = True) -> TruncSeries:
    """Pull-back to P^n of the Hirzebruch class of P^n(w)."""
    ring = RingModel.projective(w.n)
    acc = TruncSeries.zero(ring)
    for alpha in contributing_angles(w):
        acc = acc + wproj_alpha_term(w, alpha, ring)
    unnorm = acc.scale(YCoeff.one_plus_y_power(-1) * Fraction(w.deg_pi, w.order))
    if not normalized:
        return unnorm
    return unnorm.map_degrees(lambda k: YCoeff.one_plus_y_power(k - w.n))


def wproj_genus(w: WeightVector) -> YCoeff:
    """chi_y(P^n(w)): the degree of the pulled-back class divided by deg(pi)."""
    return wproj_class(w, normalized=True).integrate() * Fraction(1, w.deg_pi)


@dataclass(frozen=True)
class DefectPoint:
    angles: tuple[Angle, ...]
    chi_g: YCoeff
    chi_plain: YCoeff

    def __post_init__(self):
        angles = tuple(Angle(a) for a in self.angles)
        if any(a.is_zero() for a in angles):
            raise ThetaZero("tangent angles at an isolated fixed point must be nonzero")
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "chi_g", as_ycoeff(self.chi_g))
        object.__setattr__(self, "chi_plain", as_ycoeff(self.chi_plain))


@dataclass(frozen=True)
class IsolatedDefectDatum:
    points: Mapping[str, tuple[DefectPoint, ...]]

    def to_json(self) -> dict:
        return {
            "points": {
                g: [
                    {
                        "angles": [str(a) for a in p.angles],
                        "chi_g": p.chi_g.to_json(),
                        "chi_plain": p.chi_plain.to_json(),
                    }
                    for p in pts
                ]
                for g, pts in self.points.items()
            }
        }

    @classmethod
    def from_json(cls, obj) -> "IsolatedDefectDatum":
        from eqclass.errors import InputError

        try:
            return cls(
                {
                    str(g): tuple(
                        DefectPoint(
                            tuple(Angle.parse(str(a)) for a in p["angles"]),
                            YCoeff.from_json(p["chi_g"]),
                            YCoeff.from_json(p["chi_plain"]),
                        )
                        for p in pts
                    )
                    for g, pts in obj["points"].items()
                }
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"invalid defect datum: {exc}") from exc


def defect_sum(d: IsolatedDefectDatum, group_order: int) -> YCoeff:
    """Isolated-point defect: 1/|G| sum over g != id and x of the stalk difference times angle factors."""
    acc = ZERO
    for g, pts in d.points.items():
        if g == IDENTITY:
            continue
        for p in pts:
            diff = p.chi_g - p.chi_plain
            if not diff:
                continue
            term = diff
            for a in p.angles:
                term = term * template_coefficients(unnorm_ty_theta(a), 0)[0]
            acc = acc + term
    return acc * Fraction(1, group_order)


def _twist_lookup(V, g: str, c: FixedComponent) -> SplitBundle:
    if callable(V):
        return V(g, c)
    entry = V[g]
    return entry[c.label] if isinstance(entry, Mapping) else entry


def orbifold_twisted_sides(d: LocalizationDatum, V) -> tuple[YCoeff, YCoeff]:
    """Genus-level sides of the orbifold Atiyah-Meyer identity.

    The left side averages the degrees of the g-twisted classes; the right
    side pairs the plain (non-equivariant) twisted character with the
    Atiyah-Singer classes, i.e. the projection formula for a class pulled back
    from the quotient.
    """
    lhs = ZERO
    rhs = ZERO
    for g in d.group.elements:
        for c in d.components(g):
            bundle = _twist_lookup(V, g, c)
            if any(not t.angle.is_zero() for t in bundle.terms):
                raise NonTrivialAngle(
                    f"twist on {g}/{c.label} has a nonzero angle; the defect term does not vanish"
                )
            lhs = lhs + twisted_class(c, bundle).integrate()
            plain = character(bundle, one_plus_y=True, use_angle=False, use_hodge=True)
            rhs = rhs + (plain * atiyah_singer_class(c)).integrate()
    scale = Fraction(1, d.group.order)
    return lhs * scale, rhs * scale


def orbifold_twisted_check(d: LocalizationDatum, V) -> bool:
    lhs, rhs = orbifold_twisted_sides(d, V)
    return lhs == rhs

"""Split equivariant bundles on trivially-acted fixed components.

A :class:`SplitBundle` is a formal (virtual) sum of eigen-lines. Each line
carries its Chern root, the angle by which the group element rotates it, a
Hodge degree and an integer multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from eqclass.cyclotomic import Angle, root_of_unity
from eqclass.errors import InputError, RingMismatch
from eqclass.series import RingModel, TruncSeries
from eqclass.templates import EXP, EXP_ONE_PLUS_Y, Template, compose_template
from eqclass.ycoeff import YCoeff

__all__ = ["LineTerm", "SplitBundle", "total_class", "character"]


@dataclass(frozen=True)
class LineTerm:
    root: TruncSeries
    angle: Angle = field(default_factory=Angle)
    hodge: int = 0
    mult: int = 1

    def __post_init__(self):
        if not self.root.is_nilpotent():
            raise InputError("Chern root must have zero constant term")
        object.__setattr__(self, "angle", Angle(self.angle))

    def to_json(self) -> dict:
        return {
            "root": self.root.to_json(with_ring=False),
            "angle": str(self.angle),
            "hodge": self.hodge,
            "mult": self.mult,
        }

    @classmethod
    def from_json(cls, obj, ring: RingModel) -> "LineTerm":
        root = obj.get("root", {"terms": []})
        if isinstance(root, dict) and not ("terms" in root or "linear" in root):
            root = {"linear": root}
        try:
            return cls(
                TruncSeries.from_json(root, ring),
                Angle.parse(str(obj.get("angle", "0"))),
                int(obj.get("hodge", 0)),
                int(obj.get("mult", 1)),
            )
        except (TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"invalid line term {obj!r}") from exc


@dataclass(frozen=True)
class SplitBundle:
    ring: RingModel
    terms: tuple[LineTerm, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if t.root.ring != self.ring:
                raise RingMismatch("line term root lives in a different ring")

    @classmethod
    def trivial(cls, ring: RingModel, rank: int = 1, angle=0, hodge: int = 0) -> "SplitBundle":
        if rank == 0:
            return cls(ring)
        return cls(ring, (LineTerm(TruncSeries.zero(ring), Angle(angle), hodge, rank),))

    @classmethod
    def lines(cls, ring: RingModel, root: TruncSeries, count: int, angle=0, hodge: int = 0) -> "SplitBundle":
        if count == 0:
            return cls(ring)
        return cls(ring, (LineTerm(root, Angle(angle), hodge, count),))

    @property
    def rank(self) -> int:
        return sum(t.mult for t in self.terms)

    def _check(self, other: "SplitBundle"):
        if self.ring != other.ring:
            raise RingMismatch("bundles live over different rings")

    def __add__(self, other: "SplitBundle") -> "SplitBundle":
        self._check(other)
        return SplitBundle(self.ring, self.terms + other.terms)

    exterior_sum = __add__

    def __neg__(self) -> "SplitBundle":
        return SplitBundle(self.ring, tuple(LineTerm(t.root, t.angle, t.hodge, -t.mult) for t in self.terms))

    def __sub__(self, other: "SplitBundle") -> "SplitBundle":
        return self + (-other)

    def tensor_line(self, line: LineTerm) -> "SplitBundle":
        """Tensor with a line: roots and angles add, Hodge degrees add."""
        if line.root.ring != self.ring:
            raise RingMismatch("line lives in a different ring")
        return SplitBundle(
            self.ring,
            tuple(
                LineTerm(t.root + line.root, t.angle + line.angle, t.hodge + line.hodge, t.mult * line.mult)
                for t in self.terms
            ),
        )

    def angles(self) -> list[Angle]:
        return sorted({t.angle for t in self.terms})

    def restrict_angle(self, angle) -> "SplitBundle":
        a = Angle(angle)
        return SplitBundle(self.ring, tuple(t for t in self.terms if t.angle == a))

    def pullback(self, ring: RingModel, offset: int) -> "SplitBundle":
        return SplitBundle(
            ring, tuple(LineTerm(t.root.embed(ring, offset), t.angle, t.hodge, t.mult) for t in self.terms)
        )

    def to_json(self) -> dict:
        return {"terms": [t.to_json() for t in self.terms]}

    @classmethod
    def from_json(cls, obj, ring: RingModel) -> "SplitBundle":
        try:
            terms = obj["terms"] if isinstance(obj, dict) else obj
            return cls(ring, tuple(LineTerm.from_json(t, ring) for t in terms))
        except (KeyError, TypeError) as exc:
            raise InputError(f"invalid bundle {obj!r}") from exc


def total_class(bundle: SplitBundle, template: Template) -> TruncSeries:
    """Product of the template series over the Chern roots, with multiplicities."""
    out = TruncSeries.one(bundle.ring)
    for t in bundle.terms:
        if t.mult == 0:
            continue
        out = out * _template_power(template, t.root, t.mult)
    return out


@lru_cache(maxsize=16384)
def _template_power(template: Template, root: TruncSeries, mult: int) -> TruncSeries:
    return compose_template(template, root) ** mult


def character(
    bundle: SplitBundle,
    one_plus_y: bool = False,
    use_angle: bool = True,
    use_hodge: bool = False,
) -> TruncSeries:
    """Chern character sum over lines of mult * zeta^angle * (-y)^hodge * exp(s*root).

    ``one_plus_y`` selects the scale s = 1+y instead of s = 1.
    """
    template = EXP_ONE_PLUS_Y if one_plus_y else EXP
    out = TruncSeries.zero(bundle.ring)
    for t in bundle.terms:
        if t.mult == 0:
            continue
        w = YCoeff.constant(Fraction(t.mult))
        if use_angle and not t.angle.is_zero():
            w = w * root_of_unity(t.angle)
        if use_hodge and t.hodge:
            w = w * YCoeff.monomial(t.hodge, -1 if t.hodge % 2 else 1)
        out = out + compose_template(template, t.root).scale(w)
    return out

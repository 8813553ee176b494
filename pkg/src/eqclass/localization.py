"""Fixed-point data of finite group actions and Atiyah-Singer classes.

Homology classes on a smooth fixed component are represented by their
Poincare-dual cohomology series, so capping with the fundamental class is the
identity on representations and pushing to a point is :meth:`integrate`.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import InitVar, dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from typing import Callable

from eqclass.bundles import SplitBundle, character, total_class
from eqclass.cyclotomic import Angle, Cyclotomic, lcm
from eqclass.errors import (
    ConductorMismatch,
    InputError,
    MissingTable,
    RingMismatch,
    UnknownElement,
)
from eqclass.series import RingModel, TruncSeries
from eqclass.templates import (
    CHERN,
    NORMALIZED_TY,
    TODD,
    UNNORMALIZED_TY,
    Template,
    ty_theta,
    u_theta,
    unnorm_ty_theta,
)
from eqclass.ycoeff import ZERO, YCoeff

log = logging.getLogger(__name__)

IDENTITY = "id"

__all__ = [
    "IDENTITY",
    "FixedComponent",
    "GroupTable",
    "LocalizationDatum",
    "DelocalizedClass",
    "SpecialValues",
    "atiyah_singer_class",
    "td_star_class",
    "equivariant_chi_y",
    "specialized_invariants",
    "twisted_class",
    "lrr_td_class",
    "fibration_pushforward",
    "exterior_product",
    "exterior_product_classes",
    "delocalized_class",
    "check_conjugation",
    "unnorm_norm_check",
    "euler_characteristic",
    "product_label",
]


@dataclass(frozen=True)
class FixedComponent:
    """A connected component of X^g with its tangent and normal eigen-bundles."""

    label: str
    ring: RingModel
    tangent: SplitBundle
    normal: SplitBundle

    def __post_init__(self):
        if self.tangent.ring != self.ring or self.normal.ring != self.ring:
            raise RingMismatch(f"component {self.label}: bundles must live in the component ring")
        if self.tangent.rank != self.ring.total_cap:
            raise InputError(
                f"component {self.label}: tangent rank {self.tangent.rank} != dimension {self.ring.total_cap}"
            )
        if any(not t.angle.is_zero() for t in self.tangent.terms):
            raise InputError(f"component {self.label}: tangent angles must be 0")
        if any(t.angle.is_zero() for t in self.normal.terms):
            raise InputError(f"component {self.label}: normal angles must be nonzero")

    def __hash__(self):
        # hashed on every class-cache lookup; the fields are immutable
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.label, self.ring, self.tangent, self.normal))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def dim(self) -> int:
        return self.ring.total_cap

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "ring": self.ring.to_json(),
            "tangent": self.tangent.to_json(),
            "normal": self.normal.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> "FixedComponent":
        try:
            ring = RingModel.from_json(obj["ring"])
            return cls(
                str(obj["label"]),
                ring,
                SplitBundle.from_json(obj.get("tangent", {"terms": []}), ring),
                SplitBundle.from_json(obj.get("normal", {"terms": []}), ring),
            )
        except KeyError as exc:
            raise InputError(f"fixed component missing field {exc}") from exc


@dataclass(frozen=True, eq=False)
class GroupTable:
    """Finite group given by element labels and an optional multiplication table."""

    elements: tuple[str, ...]
    mul: Mapping | None = None
    conj_classes: tuple[tuple[str, ...], ...] | None = None
    abelian: bool = False
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        object.__setattr__(self, "elements", tuple(self.elements))
        if IDENTITY not in self.elements:
            raise InputError("group must contain the identity 'id'")
        index = frozenset(self.elements)
        if len(index) != len(self.elements):
            raise InputError("duplicate group element labels")
        object.__setattr__(self, "_index", index)
        if self.mul is not None and check:
            self._validate_table()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def _validate_table(self):
        els = self.elements
        for a in els:
            for b in els:
                c = self.mul.get((a, b))
                if c not in self._index:
                    raise InputError(f"multiplication table incomplete at ({a}, {b})")
            if self.mul[(IDENTITY, a)] != a or self.mul[(a, IDENTITY)] != a:
                raise InputError(f"'id' is not an identity for {a}")
            if not any(self.mul[(a, b)] == IDENTITY for b in els):
                raise InputError(f"{a} has no inverse")
        for a, b, c in iproduct(els, repeat=3):
            if self.mul[(self.mul[(a, b)], c)] != self.mul[(a, self.mul[(b, c)])]:
                raise InputError("multiplication table is not associative")

    def product(self, a: str, b: str) -> str:
        if self.mul is None:
            raise MissingTable("group has no multiplication table")
        return self.mul[(a, b)]

    def inverse(self, a: str) -> str:
        for b in self.elements:
            if self.product(a, b) == IDENTITY:
                return b
        raise InputError(f"{a} has no inverse")

    def conjugate(self, h: str, g: str) -> str:
        """h g h^-1."""
        if self.abelian:
            return g
        return self.product(self.product(h, g), self.inverse(h))

    @classmethod
    def cyclic(cls, n: int, name: str = "g") -> "GroupTable":
        return _cyclic_group(n, name)

    def direct_product(self, other: "GroupTable") -> "GroupTable":
        els = [product_label(a, b) for a in self.elements for b in other.elements]
        mul = None
        if self.mul is not None and other.mul is not None:
            mul = {}
            for a1, b1 in iproduct(self.elements, other.elements):
                for a2, b2 in iproduct(self.elements, other.elements):
                    mul[(product_label(a1, b1), product_label(a2, b2))] = product_label(
                        self.mul[(a1, a2)], other.mul[(b1, b2)]
                    )
        return GroupTable(tuple(els), mul, abelian=self.abelian and other.abelian, check=False)

    def to_json(self) -> dict:
        out: dict = {"elements": list(self.elements), "order": self.order}
        if self.mul is not None:
            out["mul"] = [[self.mul[(a, b)] for b in self.elements] for a in self.elements]
        if self.conj_classes is not None:
            out["conj_classes"] = [list(c) for c in self.conj_classes]
        if self.abelian:
            out["abelian"] = True
        return out

    @classmethod
    def from_json(cls, obj) -> "GroupTable":
        try:
            els = tuple(str(e) for e in obj["elements"])
        except (KeyError, TypeError) as exc:
            raise InputError("group needs an element list") from exc
        if "order" in obj and int(obj["order"]) != len(els):
            raise InputError(f"group order {obj['order']} does not match {len(els)} elements")
        mul = None
        if obj.get("mul") is not None:
            rows = obj["mul"]
            if len(rows) != len(els) or any(len(r) != len(els) for r in rows):
                raise InputError("multiplication table has the wrong shape")
            mul = {(a, b): str(rows[i][j]) for i, a in enumerate(els) for j, b in enumerate(els)}
        cc = obj.get("conj_classes")
        return cls(els, mul, tuple(tuple(c) for c in cc) if cc else None, bool(obj.get("abelian", False)))


@lru_cache(maxsize=65536)
def _angle_outside_conductor(c: FixedComponent, conductor: int):
    for t in c.normal.terms:
        if conductor % t.angle.denominator:
            return t.angle
    return None


@lru_cache(maxsize=256)
def _cyclic_group(n: int, name: str) -> GroupTable:
    # shared between data: tables are never mutated
    labels = [cyclic_label(k, name) for k in range(n)]
    mul = {(labels[i], labels[j]): labels[(i + j) % n] for i in range(n) for j in range(n)}
    return GroupTable(tuple(labels), mul, abelian=True, check=False)


def cyclic_label(k: int, name: str = "g") -> str:
    if k == 0:
        return IDENTITY
    return name if k == 1 else f"{name}^{k}"


def product_label(a: str, b: str) -> str:
    if a == IDENTITY and b == IDENTITY:
        return IDENTITY
    return f"({a},{b})"


@dataclass(frozen=True, eq=False)
class LocalizationDatum:
    """Fixed-point data for every element of a finite group acting on X."""

    conductor: int
    group: GroupTable
    fixed_data: Mapping[str, tuple[FixedComponent, ...]]
    lazy: bool = field(default=False, repr=False)

    def __post_init__(self):
        if not self.lazy:
            fd = {g: tuple(cs) for g, cs in self.fixed_data.items()}
            object.__setattr__(self, "fixed_data", fd)
            checked = set()
            for g in self.group.elements:
                if g not in fd:
                    raise InputError(f"no fixed data for element {g!r}")
                key = (g == IDENTITY, fd[g])
                if key not in checked:
                    self._validate_element(g, fd[g])
                    checked.add(key)
            extra = set(fd) - set(self.group.elements)
            if extra:
                raise UnknownElement(f"fixed data for unknown elements {sorted(extra)}")

    def _validate_element(self, g: str, comps):
        labels = [c.label for c in comps]
        if len(set(labels)) != len(labels):
            raise InputError(f"duplicate component labels for element {g!r}")
        for c in comps:
            if g == IDENTITY and c.normal.terms:
                raise InputError("the identity must have empty normal bundles")
            bad = _angle_outside_conductor(c, self.conductor)
            if bad is not None:
                raise ConductorMismatch(
                    f"angle {bad} of {g}/{c.label} does not divide conductor {self.conductor}"
                )

    def components(self, g: str) -> tuple[FixedComponent, ...]:
        if g not in self.group:
            raise UnknownElement(f"unknown group element {g!r}")
        return tuple(self.fixed_data[g])

    def component(self, g: str, label: str) -> FixedComponent:
        for c in self.components(g):
            if c.label == label:
                return c
        raise InputError(f"element {g!r} has no fixed component {label!r}")

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "group": self.group.to_json(),
            "fixed_data": {g: [c.to_json() for c in self.components(g)] for g in self.group.elements},
        }

    @classmethod
    def from_json(cls, obj) -> "LocalizationDatum":
        try:
            group = GroupTable.from_json(obj["group"])
            fd = {str(g): tuple(FixedComponent.from_json(c) for c in cs) for g, cs in obj["fixed_data"].items()}
            return cls(int(obj["conductor"]), group, fd)
        except KeyError as exc:
            raise InputError(f"localization datum missing field {exc}") from exc


@dataclass(frozen=True)
class DelocalizedClass:
    """Per-element classes on the fixed components, keyed by component label."""

    entries: Mapping[str, tuple[tuple[str, TruncSeries], ...]]

    def element(self, g: str) -> tuple[tuple[str, TruncSeries], ...]:
        return tuple(self.entries[g])

    def degree(self, g: str) -> YCoeff:
        acc = ZERO
        for _, s in self.entries[g]:
            acc = acc + s.integrate()
        return acc

    def to_json(self) -> dict:
        return {
            "classes": {
                g: [{"label": lab, "series": s.to_json()} for lab, s in comps] for g, comps in self.entries.items()
            }
        }

    @classmethod
    def from_json(cls, obj) -> "DelocalizedClass":
        try:
            return cls(
                {
                    g: tuple((c["label"], TruncSeries.from_json(c["series"])) for c in comps)
                    for g, comps in obj["classes"].items()
                }
            )
        except (KeyError, TypeError) as exc:
            raise InputError("invalid delocalized class") from exc


@dataclass(frozen=True)
class SpecialValues:
    euler: Cyclotomic
    todd: Cyclotomic
    signature: Cyclotomic


def _normal_class(normal: SplitBundle, make: Callable[[Angle], Template]) -> TruncSeries:
    out = TruncSeries.one(normal.ring)
    for angle in normal.angles():
        out = out * total_class(normal.restrict_angle(angle), make(angle))
    return out


def atiyah_singer_class(c: FixedComponent, normalized: bool = True) -> TruncSeries:
    """T_y(X^g) times the theta-twisted classes of the normal eigenbundles."""
    return _atiyah_singer_cached(c, bool(normalized))


@lru_cache(maxsize=8192)
def _atiyah_singer_cached(c: FixedComponent, normalized: bool) -> TruncSeries:
    # components are immutable, and sweeps over many actions hit the same ones
    if normalized:
        return total_class(c.tangent, NORMALIZED_TY) * _normal_class(c.normal, ty_theta)
    return total_class(c.tangent, UNNORMALIZED_TY) * _normal_class(c.normal, unnorm_ty_theta)


def td_star_class(c: FixedComponent) -> TruncSeries:
    return total_class(c.tangent, TODD) * _normal_class(c.normal, u_theta)


def euler_characteristic(c: FixedComponent) -> YCoeff:
    return total_class(c.tangent, CHERN).integrate()


def _twist_for(twist, g: str, c: FixedComponent) -> SplitBundle | None:
    if twist is None:
        return None
    if callable(twist):
        return twist(g, c)
    if c.label not in twist:
        raise InputError(f"twist has no bundle for component {c.label!r}")
    return twist[c.label]


def equivariant_chi_y(d: LocalizationDatum, g: str, twist=None, normalized: bool = True) -> YCoeff:
    """Equivariant chi_y-genus by holomorphic Lefschetz localization.

    ``twist`` maps component labels to Hodge-graded bundles (or is a callable
    ``(g, component) -> bundle``); omitted means the trivial twist.
    """
    if twist is None:
        return _untwisted_genus(d.components(g), bool(normalized))
    acc = ZERO
    for c in d.components(g):
        cls = atiyah_singer_class(c, normalized)
        V = _twist_for(twist, g, c)
        if V is not None:
            if V.ring != c.ring:
                raise RingMismatch(f"twist for {c.label} lives in a different ring")
            cls = character(V, one_plus_y=normalized, use_angle=True, use_hodge=True) * cls
        acc = acc + cls.integrate()
    return acc


@lru_cache(maxsize=8192)
def _untwisted_genus(comps: tuple[FixedComponent, ...], normalized: bool) -> YCoeff:
    acc = ZERO
    for c in comps:
        acc = acc + atiyah_singer_class(c, normalized).integrate()
    return acc


def specialized_invariants(d: LocalizationDatum, g: str) -> SpecialValues:
    chi = equivariant_chi_y(d, g)
    return SpecialValues(euler=chi.specialize(-1), todd=chi.specialize(0), signature=chi.specialize(1))


def twisted_class(c: FixedComponent, V: SplitBundle, normalized: bool = True) -> TruncSeries:
    if V.ring != c.ring:
        raise RingMismatch(f"twist for {c.label} lives in a different ring")
    ch = character(V, one_plus_y=normalized, use_angle=True, use_hodge=True)
    return ch * atiyah_singer_class(c, normalized)


def lrr_td_class(c: FixedComponent, E: SplitBundle) -> TruncSeries:
    if E.ring != c.ring:
        raise RingMismatch(f"bundle for {c.label} lives in a different ring")
    return character(E, one_plus_y=False, use_angle=True, use_hodge=False) * td_star_class(c)


def fibration_pushforward(
    base: LocalizationDatum, g: str, chi_y_f: Mapping[str, SplitBundle], normalized: bool = True
) -> tuple[tuple[str, TruncSeries], ...]:
    """Right-hand side of the fibration formula on every fixed component of g."""
    return tuple((c.label, twisted_class(c, chi_y_f[c.label], normalized)) for c in base.components(g))


def _product_component(c1: FixedComponent, c2: FixedComponent) -> FixedComponent:
    ring = c1.ring.tensor(c2.ring)
    off = c1.ring.nvars
    return FixedComponent(
        f"{c1.label}x{c2.label}",
        ring,
        c1.tangent.pullback(ring, 0) + c2.tangent.pullback(ring, off),
        c1.normal.pullback(ring, 0) + c2.normal.pullback(ring, off),
    )


def exterior_product(d1: LocalizationDatum, d2: LocalizationDatum) -> LocalizationDatum:
    """Datum of X x X' under G x G'; fixed sets of (g, g') are products."""
    group = d1.group.direct_product(d2.group)
    fd = {}
    for g1 in d1.group.elements:
        for g2 in d2.group.elements:
            fd[product_label(g1, g2)] = tuple(
                _product_component(c1, c2) for c1 in d1.components(g1) for c2 in d2.components(g2)
            )
    return LocalizationDatum(lcm(d1.conductor, d2.conductor), group, fd)


def exterior_product_classes(a: DelocalizedClass, b: DelocalizedClass) -> DelocalizedClass:
    out = {}
    for g1, comps1 in a.entries.items():
        for g2, comps2 in b.entries.items():
            items = []
            for l1, s1 in comps1:
                for l2, s2 in comps2:
                    ring = s1.ring.tensor(s2.ring)
                    items.append((f"{l1}x{l2}", s1.embed(ring, 0) * s2.embed(ring, s1.ring.nvars)))
            out[product_label(g1, g2)] = tuple(items)
    return DelocalizedClass(out)


def delocalized_class(d: LocalizationDatum, normalized: bool = True) -> DelocalizedClass:
    return DelocalizedClass(
        {g: tuple((c.label, atiyah_singer_class(c, normalized)) for c in d.components(g)) for g in d.group.elements}
    )


def check_conjugation(d: LocalizationDatum, relabel: Mapping | None = None) -> bool:
    """Conjugation covariance of classes and genera.

    ``relabel[(g, g2)]`` maps component labels of X^g to those of X^g2 for each
    conjugate pair g2 = h g h^-1; a missing entry with g2 == g means identity.
    """
    group = d.group
    relabel = relabel or {}
    if group.mul is None and not group.abelian:
        raise MissingTable("conjugation check needs a multiplication table")
    classes: dict = {}
    genera: dict = {}

    def cls(g, label):
        key = (g, label)
        if key not in classes:
            classes[key] = atiyah_singer_class(d.component(g, label))
        return classes[key]

    def genus(g):
        if g not in genera:
            genera[g] = equivariant_chi_y(d, g)
        return genera[g]

    for h in group.elements:
        for g in group.elements:
            g2 = group.conjugate(h, g)
            mapping = relabel.get((g, g2))
            src = [c.label for c in d.components(g)]
            dst = [c.label for c in d.components(g2)]
            if mapping is None:
                if g2 != g:
                    log.info("no relabeling given for %s -> %s", g, g2)
                    return False
                mapping = {lab: lab for lab in src}
            if sorted(mapping) != sorted(src) or sorted(mapping.values()) != sorted(dst):
                log.info("relabeling %s -> %s is not a bijection of components", g, g2)
                return False
            for lab in src:
                c1, c2 = d.component(g, lab), d.component(g2, mapping[lab])
                if c1.ring != c2.ring or cls(g, lab) != cls(g2, mapping[lab]):
                    log.info("classes differ on %s/%s vs %s/%s", g, lab, g2, mapping[lab])
                    return False
            if genus(g) != genus(g2):
                log.info("genera differ for %s and %s", g, g2)
                return False
    return True


def unnorm_norm_check(c: FixedComponent) -> bool:
    """Un-normalized class equals (1+y)^i times the normalized one in homological degree 2i."""
    norm = atiyah_singer_class(c, True)
    unnorm = atiyah_singer_class(c, False)
    rescaled = norm.map_degrees(lambda k: YCoeff.one_plus_y_power(c.dim - k))
    return rescaled == unnorm

"""Builders for localization data of diagonal actions on projective spaces."""

from __future__ import annotations

import os
from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import gcd, prod

from eqclass.bundles import SplitBundle
from eqclass.cyclotomic import lcm
from eqclass.errors import ConductorTooLarge, InvalidWeights
from eqclass.localization import (
    IDENTITY,
    FixedComponent,
    GroupTable,
    LocalizationDatum,
    cyclic_label,
)
from eqclass.series import RingModel, TruncSeries

__all__ = [
    "conductor_max",
    "check_conductor",
    "diagonal_components",
    "projective_datum",
    "point_datum",
    "wproj_cover_datum",
    "wproj_group_weights",
]


def conductor_max() -> int:
    return int(os.environ.get("EQCLASS_CONDUCTOR_MAX", "64"))


def check_conductor(n: int) -> int:
    if n < 1:
        raise InvalidWeights(f"conductor must be positive, got {n}")
    limit = conductor_max()
    if n > limit:
        raise ConductorTooLarge(f"conductor {n} exceeds EQCLASS_CONDUCTOR_MAX={limit}")
    return n


def _shift_key(weights: tuple[int, ...], n: int) -> tuple[int, ...]:
    # diagonal actions differing by a scalar are the same on P^n
    return min(tuple(sorted((a - c) % n for a in weights)) for c in set(weights))


@lru_cache(maxsize=4096)
def _components_for_key(key: tuple[int, ...], n: int) -> tuple[FixedComponent, ...]:
    mult: dict[int, int] = {}
    for a in key:
        mult[a] = mult.get(a, 0) + 1
    comps = []
    for lam in sorted(mult):
        k = mult[lam]
        ring = RingModel.projective(k - 1)
        x = TruncSeries.variable(ring)
        tangent = SplitBundle.lines(ring, x, k) - SplitBundle.trivial(ring)
        normal = SplitBundle(ring)
        for mu in sorted(mult):
            if mu != lam:
                normal = normal + SplitBundle.lines(ring, x, mult[mu], Fraction((mu - lam) % n, n))
        comps.append(FixedComponent(f"F{lam}", ring, tangent, normal))
    return tuple(comps)


@lru_cache(maxsize=65536)
def _diagonal_cached(weights: tuple[int, ...], conductor: int) -> tuple[FixedComponent, ...]:
    w = tuple(a % conductor for a in weights)
    return _components_for_key(_shift_key(w, conductor), conductor)


def diagonal_components(weights, conductor: int) -> tuple[FixedComponent, ...]:
    """Fixed components of diag(zeta^a_0, ..., zeta^a_n) on P^n.

    One component P(V_lambda) per distinct weight; its normal bundle has
    k_mu copies of O(1) rotated by (a_mu - a_lambda)/N for every other weight.
    Labels are ``F<lambda>`` with lambda the weight after normalizing the
    action by a scalar.
    """
    return _diagonal_cached(tuple(int(a) for a in weights), int(conductor))


def _validate_weights(weights, conductor: int):
    if not weights:
        raise InvalidWeights("need at least one weight")
    for a in weights:
        if not 0 <= a < conductor:
            raise InvalidWeights(f"weight {a} outside [0, {conductor})")


def projective_datum(n: int, weights, conductor: int) -> LocalizationDatum:
    """Cyclic group Z/N acting on P^n by the generator diag(zeta_N^a_j)."""
    weights = tuple(int(a) for a in weights)
    check_conductor(conductor)
    if len(weights) != n + 1:
        raise InvalidWeights(f"P^{n} needs {n + 1} weights, got {len(weights)}")
    _validate_weights(weights, conductor)
    group = GroupTable.cyclic(conductor)
    fd = {
        cyclic_label(m): diagonal_components(tuple(m * a for a in weights), conductor) for m in range(conductor)
    }
    return LocalizationDatum(conductor, group, fd)


def point_datum() -> LocalizationDatum:
    ring = RingModel.point()
    comp = FixedComponent("pt", ring, SplitBundle(ring), SplitBundle(ring))
    return LocalizationDatum(1, GroupTable((IDENTITY,), {(IDENTITY, IDENTITY): IDENTITY}, abelian=True), {IDENTITY: (comp,)})


def _wproj_label(k: tuple[int, ...]) -> str:
    if not any(k):
        return IDENTITY
    return "(" + ",".join(str(x) for x in k) + ")"


def wproj_group_weights(w, k) -> tuple[int, ...]:
    """Diagonal weights mod lcm(w) of the element k of G(w) = prod Z/w_j."""
    n = lcm(*w)
    return tuple(kj * (n // wj) for kj, wj in zip(k, w))


class _WprojFixedData(Mapping):
    """Fixed data of G(w) on P^n, built on access; elements sharing an action share components."""

    def __init__(self, w: tuple[int, ...]):
        self.w = w
        self.conductor = lcm(*w)
        self._labels = {_wproj_label(k): k for k in iproduct(*(range(wj) for wj in w))}

    def __getitem__(self, label):
        k = self._labels[label]
        return diagonal_components(wproj_group_weights(self.w, k), self.conductor)

    def __iter__(self):
        return iter(self._labels)

    def __len__(self):
        return len(self._labels)


def wproj_cover_datum(weights) -> LocalizationDatum:
    """P^n with the product of roots-of-unity groups G(w) acting on coordinates."""
    w = tuple(int(x) for x in weights)
    if not w or any(x <= 0 for x in w):
        raise InvalidWeights(f"weights must be positive, got {w}")
    check_conductor(lcm(*w))
    fd = _WprojFixedData(w)
    group = GroupTable(tuple(fd), None, abelian=True)
    return LocalizationDatum(fd.conductor, group, fd, lazy=True)


def wproj_invariants(weights) -> dict:
    w = tuple(int(x) for x in weights)
    order = prod(w)
    d = gcd(*w)
    return {"order": order, "gcd": d, "deg_pi": order // d, "conductor": lcm(*w), "n": len(w) - 1}

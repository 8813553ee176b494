"""Additive chi_y oracle on cell stratifications.

A finite-order linear automorphism of C^k lies in the connected group GL_k, so
it acts trivially on the one-dimensional H^{2k}_c(C^k). Each invariant cell
therefore contributes (-y)^k to the compactly supported chi_y-genus, and the
scissor relation makes the genus a sum over cells.
"""

from __future__ import annotations

from dataclasses import dataclass

from eqclass.errors import InputError
from eqclass.ycoeff import ZERO, YCoeff

__all__ = ["Cell", "Stratification", "chi_c_y_cells", "compactification_check", "projective_cells"]


@dataclass(frozen=True)
class Cell:
    dim: int
    count: int = 1

    def __post_init__(self):
        if self.dim < 0:
            raise InputError(f"cell dimension must be >= 0, got {self.dim}")
        if self.count <= 0:
            raise InputError(f"cell count must be positive, got {self.count}")


@dataclass(frozen=True)
class Stratification:
    strata: tuple[Cell, ...] = ()

    def __add__(self, other: "Stratification") -> "Stratification":
        """Disjoint union."""
        return Stratification(self.strata + other.strata)

    def to_json(self) -> dict:
        return {"strata": [{"dim": c.dim, "count": c.count} for c in self.strata]}

    @classmethod
    def from_json(cls, obj) -> "Stratification":
        try:
            return cls(tuple(Cell(int(s["dim"]), int(s.get("count", 1))) for s in obj["strata"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"invalid stratification {obj!r}") from exc


def projective_cells(n: int) -> Stratification:
    """Standard cells of P^n; each is invariant under every diagonal action."""
    return Stratification(tuple(Cell(k) for k in range(n + 1)))


def chi_c_y_cells(s: Stratification) -> YCoeff:
    acc = ZERO
    for c in s.strata:
        acc = acc + YCoeff.monomial(c.dim, c.count * (-1 if c.dim % 2 else 1))
    return acc


def compactification_check(chi_c_X, chi_Xbar, chi_boundary) -> bool:
    """chi^c_y(X) == chi_y(Xbar) - chi_y(boundary), exactly."""
    return chi_c_X == chi_Xbar - chi_boundary

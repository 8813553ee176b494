"""Acceptance checks shared by ``eqclass verify`` and the test suite.

Every check is exact: values are compared in the cyclotomic / YCoeff rings
with zero tolerance. Each check returns ``(passed, detail)``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable

from eqclass.builders import projective_datum, wproj_cover_datum
from eqclass.bundles import SplitBundle
from eqclass.cyclotomic import lcm
from eqclass.fixtures import s3_on_p2
from eqclass.localization import (
    IDENTITY,
    LocalizationDatum,
    atiyah_singer_class,
    delocalized_class,
    equivariant_chi_y,
    euler_characteristic,
    exterior_product,
    exterior_product_classes,
    fibration_pushforward,
    product_label,
    specialized_invariants,
    twisted_class,
    unnorm_norm_check,
)
from eqclass.motivic import chi_c_y_cells, projective_cells
from eqclass.quotient import (
    DefectPoint,
    IsolatedDefectDatum,
    WeightVector,
    chi_y_quotient,
    defect_sum,
    wproj_alpha_term,
    wproj_class,
    wproj_genus,
)
from eqclass.series import RingModel, TruncSeries
from eqclass.templates import (
    CHERN,
    L_CLASS,
    NORMALIZED_TY,
    TODD,
    template_coefficients,
)
from eqclass.ycoeff import ONE, Y, YCoeff

__all__ = ["Criterion", "CRITERIA", "run_all"]


def hodge_polynomial(n: int) -> YCoeff:
    """sum_{p=0}^n (-y)^p."""
    return YCoeff({p: (-1) ** p for p in range(n + 1)})


def diagonal_actions(max_n: int = 4, max_conductor: int = 12):
    """Every weight vector 0 = a_0 <= a_1 <= ... <= a_n < N up to reordering."""
    for N in range(1, max_conductor + 1):
        for n in range(1, max_n + 1):
            for rest in combinations_with_replacement(range(N), n):
                yield n, (0,) + rest, N


def weight_vectors(max_n: int = 3, max_lcm: int = 12):
    for n in range(1, max_n + 1):
        for w in combinations_with_replacement(range(1, max_lcm + 1), n + 1):
            if lcm(*w) <= max_lcm:
                yield w


def _p1_closed_form():
    bad = []
    target = ONE - Y
    count = 0
    for N in range(2, 13):
        for k in range(1, N):
            d = projective_datum(1, (0, k), N)
            count += 1
            if equivariant_chi_y(d, "g") != target:
                bad.append((N, k))
    return not bad, f"{count} actions diag(1, zeta_N^k), failures: {bad or 'none'}"


def _trace_identity():
    bad = []
    count = 0
    for n, weights, N in diagonal_actions():
        d = projective_datum(n, weights, N)
        target = hodge_polynomial(n)
        cells = chi_c_y_cells(projective_cells(n))
        if cells != target:
            bad.append(("cells", n))
        for g in d.group.elements:
            count += 1
            if equivariant_chi_y(d, g) != target:
                bad.append((n, weights, N, g))
    return not bad, f"{count} (action, element) pairs on P^n, n<=4, N<=12; failures: {bad[:5] or 'none'}"


def _specializations():
    out = []
    d1 = projective_datum(1, (0, 1), 3)
    out.append(specialized_invariants(d1, "g").euler == 2)
    d2 = projective_datum(2, (0, 1, 2), 3)
    out.append(specialized_invariants(d2, "g").euler == 3)
    euler_sum = sum((euler_characteristic(c) for c in d2.components("g")), YCoeff())
    out.append(euler_sum == 3)
    for n in range(1, 5):
        dn = projective_datum(n, (0,) * (n + 1), 1)
        out.append(specialized_invariants(dn, IDENTITY).todd == 1)
    out.append(specialized_invariants(d2, IDENTITY).signature == 1)
    return all(out), f"checks passed: {sum(out)}/{len(out)}"


def _templates():
    ok = [str(c) for c in template_coefficients(TODD, 4)] == ["1", "1/2", "1/12", "0", "-1/720"]
    ok &= [str(c) for c in template_coefficients(L_CLASS, 4)] == ["1", "0", "1/3", "0", "-1/45"]
    ty = template_coefficients(NORMALIZED_TY, 6)
    for value, ref in ((-1, CHERN), (0, TODD), (1, L_CLASS)):
        ref_c = template_coefficients(ref, 6)
        ok &= all(c.specialize(value) == r.constant_value() for c, r in zip(ty, ref_c))
    return ok, "Todd/L to order 4; T_y at y=-1,0,1 vs Chern/Todd/L to order 6"


def _multiplicativity():
    a = projective_datum(1, (0, 1), 3)
    b = projective_datum(1, (0, 1), 4)
    prod_datum = exterior_product(a, b)
    lhs = delocalized_class(prod_datum)
    rhs = exterior_product_classes(delocalized_class(a), delocalized_class(b))
    ok = all(dict(lhs.element(g)) == dict(rhs.element(g)) for g in prod_datum.group.elements)
    for g1 in a.group.elements:
        for g2 in b.group.elements:
            ok &= equivariant_chi_y(prod_datum, product_label(g1, g2)) == equivariant_chi_y(
                a, g1
            ) * equivariant_chi_y(b, g2)
    return ok, f"P^1 x P^1 under Z/3 x Z/4, {prod_datum.group.order} elements"


def _fibration():
    base = projective_datum(1, (0, 1), 5)
    fiber = projective_datum(1, (0, 0), 1)
    total = exterior_product(base, fiber)
    ok = True
    for g in base.group.elements:
        g_total = product_label(g, IDENTITY)
        chi_f = {}
        for c in base.components(g):
            # H^*(P^1) with trivial monodromy: Hodge degrees 0 and 1
            chi_f[c.label] = SplitBundle.trivial(c.ring, 1, hodge=0) + SplitBundle.trivial(c.ring, 1, hodge=1)
        rhs = dict(fibration_pushforward(base, g, chi_f))
        fiber_comp = fiber.components(IDENTITY)[0]
        for bc in base.components(g):
            tc = total.component(g_total, f"{bc.label}x{fiber_comp.label}")
            pushed = atiyah_singer_class(tc).integrate_fiber(bc.ring, fiber_comp.ring)
            ok &= pushed == rhs[bc.label]
    return ok, "projection P^1 x P^1 -> P^1, Z/5 on the base, degree-wise"


def _quotient_genus():
    d = wproj_cover_datum((1, 2))
    ok = chi_y_quotient(d) == ONE - Y
    count = 0
    bad = []
    for w in weight_vectors():
        W = WeightVector(w)
        count += 1
        g = wproj_genus(W)
        target = hodge_polynomial(W.n)
        if g != target or chi_y_quotient(wproj_cover_datum(w)) != target:
            bad.append(w)
        if W.n == 2 and g.specialize(1) != 1:
            bad.append(("y=1", w))
    return ok and not bad, f"{count} weight vectors with n<=3, lcm<=12; failures: {bad[:5] or 'none'}"


def _distinguishing():
    a = wproj_class(WeightVector((1, 1, 1)))
    b = wproj_class(WeightVector((1, 1, 2)))
    differs = [k for k in (1, 2) if a.degree_part(k) != b.degree_part(k)]
    return bool(differs), f"degrees where P^2(1,1,1) and P^2(1,1,2) differ: {differs}"


def _vanishing_alpha():
    term = wproj_alpha_term(WeightVector((2, 3)), Fraction(1, 5))
    return term.is_zero(), f"w=(2,3), alpha=2pi/5 term: {term}"


def _conjugation():
    from eqclass.localization import check_conjugation

    d, relabel = s3_on_p2()
    target = hodge_polynomial(2)
    genera_ok = all(equivariant_chi_y(d, t) == target for t in ("s01", "s02", "s12"))
    covariant = check_conjugation(d, relabel)
    corrupted = dict(relabel)
    key = next(k for k in corrupted if k[0] == "s01")
    corrupted[key] = {"line": "pt", "pt": "line"}
    negative = not check_conjugation(d, corrupted)
    return genera_ok and covariant and negative, (
        f"transposition genera = 1-y+y^2: {genera_ok}; covariance: {covariant}; corrupted rejected: {negative}"
    )


def _twisted():
    d = projective_datum(2, (0, 0, 1), 2)
    ok = True
    for g in d.group.elements:
        for c in d.components(g):
            base = atiyah_singer_class(c)
            ok &= twisted_class(c, SplitBundle.trivial(c.ring)) == base
            for p in (1, 2):
                V = SplitBundle.trivial(c.ring, 1, hodge=p)
                ok &= twisted_class(c, V) == base.scale(YCoeff.monomial(p, (-1) ** p))
            V = SplitBundle.trivial(c.ring, 3) + SplitBundle.trivial(c.ring, 1, hodge=1)
            lhs = twisted_class(c, V).integrate().specialize(-1)
            ok &= lhs == V.rank * euler_characteristic(c).specialize(-1)
    return ok, "rigidity, normalization and y=-1 rank x Euler on P^2 under Z/2"


def _unnorm_norm():
    comps = []
    for n, weights, N in ((1, (0, 1), 3), (2, (0, 0, 1), 2), (2, (0, 1, 2), 3), (3, (0, 0, 1, 3), 4)):
        d = projective_datum(n, weights, N)
        for g in d.group.elements:
            comps.extend(d.components(g))
    s3, _ = s3_on_p2()
    for g in s3.group.elements:
        comps.extend(s3.components(g))
    results = [unnorm_norm_check(c) for c in comps]
    return all(results), f"{sum(results)}/{len(results)} fixture components"


def _defect():
    zero = IsolatedDefectDatum({"g": (DefectPoint(("1/3", "2/3"), ONE - Y, ONE - Y),)})
    single = IsolatedDefectDatum({"g": (DefectPoint(("1/2",), YCoeff.constant(2), ONE),)})
    val = defect_sum(single, 2)
    expected = (ONE - Y) * Fraction(1, 4)
    return defect_sum(zero, 3).is_zero() and val == expected, f"single-point value {val}"


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    check: Callable[[], tuple[bool, str]]


CRITERIA = (
    Criterion(1, "p1-closed-form", _p1_closed_form),
    Criterion(2, "trace-identity", _trace_identity),
    Criterion(3, "specializations", _specializations),
    Criterion(4, "template-regression", _templates),
    Criterion(5, "multiplicativity", _multiplicativity),
    Criterion(6, "fibration-formula", _fibration),
    Criterion(7, "quotient-genus", _quotient_genus),
    Criterion(8, "wproj-distinguishing", _distinguishing),
    Criterion(9, "vanishing-alpha", _vanishing_alpha),
    Criterion(10, "conjugation-covariance", _conjugation),
    Criterion(11, "twisted-rigidity", _twisted),
    Criterion(12, "unnorm-norm-relation", _unnorm_norm),
    Criterion(13, "defect-formula", _defect),
)


def run_all(names=None) -> list[dict]:
    out = []
    for crit in CRITERIA:
        if names and crit.name not in names and str(crit.number) not in names:
            continue
        t0 = time.perf_counter()
        passed, detail = crit.check()
        out.append(
            {
                "criterion": crit.number,
                "name": crit.name,
                "passed": bool(passed),
                "seconds": round(time.perf_counter() - t0, 3),
                "detail": detail,
            }
        )
    return out

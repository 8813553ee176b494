"""Template series against independent sympy expansions."""

import cmath
from fractions import Fraction

import pytest
import sympy as sp

from eqclass.errors import NonNilpotentArgument, ThetaZero
from eqclass.series import RingModel, TruncSeries
from eqclass.templates import (
    CHERN,
    EXP,
    EXP_ONE_PLUS_Y,
    L_CLASS,
    NORMALIZED_TY,
    TODD,
    UNNORMALIZED_TY,
    compose_template,
    template_coefficients,
    ty_theta,
    u_theta,
    unnorm_ty_theta,
)
from eqclass.ycoeff import YCoeff

x, y, u = sp.symbols("x y u")
ORDER = 6

ORACLES = {
    CHERN: 1 + x,
    TODD: x / (1 - sp.exp(-x)),
    L_CLASS: x / sp.tanh(x),
    NORMALIZED_TY: x * (1 + y) / (1 - sp.exp(-x * (1 + y))) - x * y,
    UNNORMALIZED_TY: x * (1 + y * sp.exp(-x)) / (1 - sp.exp(-x)),
    EXP: sp.exp(x),
    EXP_ONE_PLUS_Y: sp.exp((1 + y) * x),
}


def _taylor(expr, order):
    s = sp.series(expr, x, 0, order + 1).removeO()
    return [sp.simplify(s.coeff(x, k)) for k in range(order + 1)]


def _to_sympy(c: YCoeff):
    num = 0
    for d, coeff in c.terms.items():
        q = coeff.to_fraction()
        num += sp.Rational(q.numerator, q.denominator) * y**d
    return num / (1 + y) ** c.denom_power


@pytest.mark.parametrize("template", list(ORACLES), ids=str)
def test_rational_templates_match_sympy(template):
    ours = template_coefficients(template, ORDER)
    ref = _taylor(ORACLES[template], ORDER)
    for k, (a, b) in enumerate(zip(ours, ref)):
        assert sp.simplify(_to_sympy(a) - b) == 0, (template, k)


def test_bernoulli_regression():
    assert [str(c) for c in template_coefficients(TODD, 4)] == ["1", "1/2", "1/12", "0", "-1/720"]
    assert [str(c) for c in template_coefficients(L_CLASS, 4)] == ["1", "0", "1/3", "0", "-1/45"]


THETA_ORACLES = [
    (u_theta, 1 / (1 - u * sp.exp(-x))),
    (unnorm_ty_theta, (1 + u * y * sp.exp(-x)) / (1 - u * sp.exp(-x))),
    (ty_theta, (1 + u * y * sp.exp(-x * (1 + y))) / (1 - u * sp.exp(-x * (1 + y)))),
]


@pytest.mark.parametrize("make, expr", THETA_ORACLES, ids=["U", "Ty~", "Ty"])
@pytest.mark.parametrize("theta", [Fraction(1, 2), Fraction(1, 3), Fraction(3, 4), Fraction(5, 12)])
def test_theta_templates_match_sympy_numerically(make, expr, theta):
    order = 4
    ours = template_coefficients(make(theta), order)
    ref = _taylor(expr, order)
    uval = cmath.exp(-2j * cmath.pi * float(theta))
    for yval in (Fraction(1, 3), Fraction(-2, 5), Fraction(2)):
        for k in range(order + 1):
            want = complex(ref[k].subs({u: uval, y: sp.Rational(yval.numerator, yval.denominator)}).evalf(30))
            got = ours[k].specialize(yval).embed()
            assert abs(got - want) < 1e-9, (theta, k, yval)


def test_isolated_point_constant():
    # (1 + y zeta^-t)/(1 - zeta^-t) at t = 1/2 is (1 - y)/2
    c = template_coefficients(unnorm_ty_theta(Fraction(1, 2)), 0)[0]
    assert str(c) == "1/2 - 1/2*y"
    assert str(template_coefficients(u_theta(Fraction(1, 2)), 0)[0]) == "1/2"


def test_specializations_of_ty():
    ty = template_coefficients(NORMALIZED_TY, 8)
    for value, ref in ((-1, CHERN), (0, TODD), (1, L_CLASS)):
        for a, b in zip(ty, template_coefficients(ref, 8)):
            assert a.specialize(value) == b.constant_value()


def test_theta_zero_rejected():
    with pytest.raises(ThetaZero):
        u_theta(0)
    with pytest.raises(ThetaZero):
        ty_theta(Fraction(1))


def test_compose_needs_nilpotent_argument():
    ring = RingModel.projective(2)
    with pytest.raises(NonNilpotentArgument):
        compose_template(TODD, TruncSeries.one(ring))


def test_todd_of_p2_by_euler_sequence():
    # td(P^2) = td(x)^3 integrates to 1
    ring = RingModel.projective(2)
    x_ = TruncSeries.variable(ring)
    assert (compose_template(TODD, x_) ** 3).integrate() == 1
    assert (compose_template(L_CLASS, x_) ** 3).integrate() == 1
    assert (compose_template(CHERN, x_) ** 3).integrate() == 3

from fractions import Fraction

import mpmath
import pytest

from eqclass.builders import projective_datum, wproj_cover_datum
from eqclass.bundles import SplitBundle
from eqclass.errors import InvalidWeights, NonTrivialAngle, ThetaZero
from eqclass.quotient import (
    DefectPoint,
    IsolatedDefectDatum,
    WeightVector,
    chi_y_quotient,
    contributing_angles,
    defect_sum,
    orbifold_twisted_check,
    orbifold_twisted_sides,
    wproj_alpha_term,
    wproj_class,
    wproj_genus,
)
from eqclass.ycoeff import ONE, Y, YCoeff

mpmath.mp.dps = 30


def hodge(n):
    return YCoeff({p: (-1) ** p for p in range(n + 1)})


def numeric_wproj(w, yval, order):
    """Taylor coefficients of (deg pi/|G|)/(1+y) * sum_alpha prod_j w_j x (1+y e^-w_j(x+2 pi i a))/(1-e^...)."""
    W = WeightVector(w)
    total = [mpmath.mpc(0)] * (order + 1)
    for a in contributing_angles(W):
        t = mpmath.mpf(a.turns.numerator) / a.turns.denominator

        def f(x, t=t):
            out = mpmath.mpc(1)
            for wj in w:
                e = mpmath.exp(-wj * (x + 2j * mpmath.pi * t))
                out *= wj * x * (1 + yval * e) / (1 - e)
            return out

        # contour-integral Taylor coefficients avoid evaluating the removable singularity at 0
        coeffs = mpmath.taylor(f, 0, order, method="quad", radius=mpmath.mpf("0.05"))
        total = [s + c for s, c in zip(total, coeffs)]
    scale = mpmath.mpf(W.deg_pi) / W.order / (1 + yval)
    return [c * scale for c in total]


@pytest.mark.parametrize("w", [(1, 2), (2, 3), (1, 1, 2), (1, 2, 3), (2, 2, 3)])
def test_wproj_class_matches_numeric_oracle(w):
    W = WeightVector(w)
    yval = Fraction(2, 7)
    ours = wproj_class(W, normalized=False)
    ref = numeric_wproj(w, mpmath.mpf(2) / 7, W.n)
    for k in range(W.n + 1):
        got = ours.terms.get((k,), YCoeff()).specialize(yval).embed()
        assert abs(got - complex(ref[k])) < 1e-15, (w, k)


def test_unit_weights_give_plain_projective_space():
    s = wproj_class(WeightVector((1, 1, 1)))
    assert str(s) == "(1) + (3/2 - 3/2*y)*x + (1 - y + y^2)*x^2"


def test_distinguishing_example():
    a = wproj_class(WeightVector((1, 1, 1)))
    b = wproj_class(WeightVector((1, 1, 2)))
    assert a.degree_part(1) != b.degree_part(1)
    assert a.degree_part(2) != b.degree_part(2)
    assert wproj_genus(WeightVector((1, 1, 2))) == hodge(2)


def test_non_contributing_angle_vanishes():
    assert wproj_alpha_term(WeightVector((2, 3)), Fraction(1, 5)).is_zero()
    assert Fraction(1, 5) not in {a.turns for a in contributing_angles(WeightVector((2, 3)))}


@pytest.mark.parametrize("w", [(1, 2), (3, 4), (2, 2), (1, 2, 3), (2, 4, 6), (1, 1, 1, 2)])
def test_quotient_genus_two_ways(w):
    W = WeightVector(w)
    assert wproj_genus(W) == hodge(W.n)
    assert chi_y_quotient(wproj_cover_datum(w)) == hodge(W.n)


def test_weight_vector_invariants():
    W = WeightVector.parse("2,4,6")
    assert (W.n, W.order, W.gcd, W.deg_pi, W.conductor) == (2, 48, 2, 24, 12)
    with pytest.raises(InvalidWeights):
        WeightVector((1, 0))
    with pytest.raises(InvalidWeights):
        WeightVector.parse("1,a")


def test_quotient_of_p1_by_rotation():
    # P^1 / (Z/3) is again P^1
    assert chi_y_quotient(projective_datum(1, (0, 1), 3)) == ONE - Y


class TestDefect:
    def test_zero_when_stalks_agree(self):
        d = IsolatedDefectDatum({"g": (DefectPoint(("1/3", "2/3"), ONE - Y, ONE - Y),)})
        assert defect_sum(d, 3).is_zero()

    def test_single_point_value(self):
        d = IsolatedDefectDatum({"g": (DefectPoint(("1/2",), YCoeff.constant(2), ONE),)})
        # (2 - 1) * (1 - y)/2 / |G|
        assert defect_sum(d, 2) == (ONE - Y) * Fraction(1, 4)

    def test_identity_entries_ignored(self):
        d = IsolatedDefectDatum({"id": (DefectPoint(("1/2",), YCoeff.constant(5), ONE),)})
        assert defect_sum(d, 2).is_zero()

    def test_zero_angle_rejected(self):
        with pytest.raises(ThetaZero):
            DefectPoint(("0",), ONE, ONE)

    def test_json_round_trip(self):
        d = IsolatedDefectDatum({"g": (DefectPoint(("1/4", "3/4"), ONE + Y, ONE),)})
        assert IsolatedDefectDatum.from_json(d.to_json()).to_json() == d.to_json()


class TestOrbifoldTwist:
    def test_trivial_angle_twist(self):
        d = projective_datum(2, (0, 1, 2), 3)

        def V(g, c):
            return SplitBundle.trivial(c.ring, 2) + SplitBundle.trivial(c.ring, 1, hodge=1)

        lhs, rhs = orbifold_twisted_sides(d, V)
        assert lhs == rhs == hodge(2) * (2 - Y)
        assert orbifold_twisted_check(d, V)

    def test_nontrivial_angle_refused(self):
        d = projective_datum(1, (0, 1), 2)
        with pytest.raises(NonTrivialAngle):
            orbifold_twisted_sides(d, lambda g, c: SplitBundle.trivial(c.ring, 1, angle=Fraction(1, 2)))

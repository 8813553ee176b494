import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqclass.cyclotomic import Angle, Cyclotomic, cyclotomic_polynomial, root_of_unity
from eqclass.errors import ConductorMismatch, DivisionByZero, InputError
from strategies import conductors, cyclotomics


@pytest.mark.parametrize(
    "n, coeffs",
    [(1, [-1, 1]), (2, [1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1]), (12, [1, 0, -1, 0, 1])],
)
def test_cyclotomic_polynomials(n, coeffs):
    assert list(cyclotomic_polynomial(n)) == coeffs


def test_zeta_powers_wrap():
    z = Cyclotomic.zeta(5)
    assert z**5 == 1
    assert z**7 == z**2
    assert sum((z**k for k in range(5)), Cyclotomic.from_rational(0)) == 0


def test_mixed_conductors_lift_to_lcm():
    i = Cyclotomic.zeta(4)
    w = Cyclotomic.zeta(3)
    p = i * w
    assert p.conductor == 12
    assert p == Cyclotomic.zeta(12, 7)


def test_rational_operands_keep_conductor():
    z = Cyclotomic.zeta(7)
    half = Cyclotomic.from_rational(Fraction(1, 2))
    assert (z * half).conductor == 7
    assert (half + z) - z == half


def test_equality_and_hash_ignore_representation():
    a = Cyclotomic.from_rational(3, 12)
    b = Cyclotomic.from_rational(3)
    assert a == b and hash(a) == hash(b)
    assert Cyclotomic.zeta(4).lift(8) == Cyclotomic.zeta(8, 2)
    assert hash(Cyclotomic.zeta(4).lift(12)) == hash(Cyclotomic.zeta(4))


def test_sqrt_minus_three():
    w = Cyclotomic.zeta(3)
    assert (w - w**2) ** 2 == -3


def test_embed_matches_complex_exponential():
    z = Cyclotomic.zeta(12, 5) * Fraction(3, 2) + 1
    assert abs(z.embed() - (1.5 * cmath.exp(2j * cmath.pi * 5 / 12) + 1)) < 1e-12


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        Cyclotomic.from_rational(0, 5).inverse()
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.zeta(5) / Cyclotomic.from_rational(0)


def test_lift_to_non_multiple_rejected():
    with pytest.raises(ConductorMismatch):
        Cyclotomic.zeta(4).lift(6)


def test_root_of_unity():
    assert root_of_unity(Fraction(1, 4)) == Cyclotomic.zeta(4)
    assert root_of_unity(Fraction(1, 2), 6) == -1
    with pytest.raises(ConductorMismatch):
        root_of_unity(Fraction(1, 4), 6)


def test_angle_normalization_and_parse():
    assert Angle(Fraction(5, 4)) == Angle(Fraction(1, 4))
    assert Angle(Fraction(-1, 3)) == Angle("2/3")
    assert str(Angle.parse("3/6")) == "1/2"
    assert (Angle("1/3") + Angle("2/3")).is_zero()
    with pytest.raises(InputError):
        Angle.parse("one half")


def test_str_and_json():
    c = Cyclotomic.from_coeffs(4, [Fraction(1, 2), Fraction(1, 2)])
    assert str(c) == "1/2 + 1/2*z4"
    assert c.to_json() == {"conductor": 4, "coeffs": ["1/2", "1/2"]}
    assert Cyclotomic.from_json(c.to_json()) == c


@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyclotomics())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == 1


@given(cyclotomics())
def test_conjugate_is_an_involution_and_norm_is_real_positive(a):
    assert a.conjugate().conjugate() == a
    n = a * a.conjugate()
    assert abs(n.embed().imag) < 1e-9
    assert n.embed().real >= -1e-9


@given(conductors, st.integers(0, 40))
def test_embedding_is_a_homomorphism_on_powers(n, k):
    z = Cyclotomic.zeta(n)
    assert abs((z**k).embed() - cmath.exp(2j * cmath.pi * k / n)) < 1e-9


@given(cyclotomics())
def test_json_round_trip(a):
    assert Cyclotomic.from_json(a.to_json()) == a

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqclass.errors import InputError, NonUnitConstant, RingMismatch
from eqclass.series import RingModel, TruncSeries
from eqclass.ycoeff import ONE, Y, YCoeff

P2 = RingModel.projective(2)
x = TruncSeries.variable(P2)

coeff = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def p2_series(draw):
    return TruncSeries(P2, {(k,): YCoeff({0: draw(coeff), 1: draw(coeff)}) for k in range(3)})


def test_truncation_at_cap():
    assert x**3 == TruncSeries.zero(P2)
    assert (x * x).integrate() == 1


def test_inverse_of_unit_series():
    s = TruncSeries.one(P2) + x.scale(3)
    assert s * s.inverse() == TruncSeries.one(P2)
    with pytest.raises(NonUnitConstant):
        x.inverse()


def test_negative_powers():
    s = TruncSeries.one(P2) - x
    assert s ** -2 == (s * s).inverse()


def test_degree_parts_and_map_degrees():
    s = TruncSeries.one(P2) + x + x * x
    assert s.degree_part(1) == x
    t = s.map_degrees(lambda k: YCoeff.one_plus_y_power(k))
    assert t.degree_part(2) == (x * x).scale(YCoeff.one_plus_y_power(2))


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        x + TruncSeries.variable(RingModel.projective(3))


def test_tensor_renames_and_fiber_integration():
    base = RingModel.projective(1)
    fiber = RingModel.projective(1)
    prod = base.tensor(fiber)
    assert prod.vars == ("x", "x2")
    a = TruncSeries.variable(base).embed(prod, 0)
    b = TruncSeries.variable(fiber).embed(prod, 1)
    assert (a * b).integrate() == 1
    pushed = (a + b + a * b).integrate_fiber(base, fiber)
    assert pushed == TruncSeries.one(base) + TruncSeries.variable(base)


def test_specialize_y():
    s = x.scale(ONE - Y)
    assert s.specialize_y(1) == TruncSeries.zero(P2)
    assert s.specialize_y(-1) == x.scale(2)


def test_json_round_trip_and_linear_roots():
    s = TruncSeries.one(P2) + x.scale(YCoeff({0: Fraction(1, 2), 1: -1}, 1))
    assert TruncSeries.from_json(s.to_json()) == s
    assert TruncSeries.from_json({"linear": {"x": 2}}, P2) == x.scale(2)
    with pytest.raises(InputError):
        TruncSeries.from_json({"terms": []})


def test_ring_model_json():
    assert RingModel.from_json(P2.to_json()) == P2
    assert RingModel.from_json({"projective": 2}) == P2


@given(p2_series(), p2_series(), p2_series())
def test_commutative_ring(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(p2_series())
def test_integration_is_linear_and_reads_top_degree(a):
    assert (a + a).integrate() == a.integrate() * 2
    assert a.integrate() == a.degree_part(2).integrate()

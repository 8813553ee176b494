from fractions import Fraction

import pytest

from eqclass.builders import diagonal_components, point_datum, projective_datum
from eqclass.bundles import SplitBundle
from eqclass.cyclotomic import Angle
from eqclass.errors import ConductorMismatch, ConductorTooLarge, InputError, InvalidWeights, MissingTable, UnknownElement
from eqclass.fixtures import s3_on_p2
from eqclass.localization import (
    IDENTITY,
    FixedComponent,
    GroupTable,
    LocalizationDatum,
    atiyah_singer_class,
    check_conjugation,
    delocalized_class,
    equivariant_chi_y,
    euler_characteristic,
    exterior_product,
    lrr_td_class,
    specialized_invariants,
    td_star_class,
    twisted_class,
    unnorm_norm_check,
)
from eqclass.series import RingModel, TruncSeries
from eqclass.ycoeff import ONE, Y, YCoeff


def hodge(n):
    return YCoeff({p: (-1) ** p for p in range(n + 1)})


class TestBuilder:
    def test_p1_generator_has_two_points(self):
        comps = projective_datum(1, (0, 1), 3).components("g")
        assert [c.dim for c in comps] == [0, 0]
        angles = sorted(str(t.angle) for c in comps for t in c.normal.terms)
        assert angles == ["1/3", "2/3"]

    def test_line_and_point(self):
        comps = projective_datum(2, (0, 0, 1), 2).components("g")
        assert sorted(c.dim for c in comps) == [0, 1]
        line = next(c for c in comps if c.dim == 1)
        assert line.normal.rank == 1 and str(line.normal.terms[0].angle) == "1/2"
        point = next(c for c in comps if c.dim == 0)
        assert point.normal.rank == 2

    def test_trivial_action_is_whole_space(self):
        comps = diagonal_components((2, 2, 2, 2), 5)
        assert len(comps) == 1 and comps[0].dim == 3 and not comps[0].normal.terms

    def test_scalar_shift_gives_same_components(self):
        assert diagonal_components((0, 1, 3), 7) is diagonal_components((2, 3, 5), 7)

    def test_invalid_weights(self):
        with pytest.raises(InvalidWeights):
            projective_datum(1, (0, 3), 3)
        with pytest.raises(InvalidWeights):
            projective_datum(2, (0, 1), 3)

    def test_conductor_limit(self, monkeypatch):
        monkeypatch.setenv("EQCLASS_CONDUCTOR_MAX", "8")
        with pytest.raises(ConductorTooLarge):
            projective_datum(1, (0, 1), 9)


class TestGroupTable:
    def test_cyclic(self):
        g = GroupTable.cyclic(4)
        assert g.product("g", "g^3") == IDENTITY
        assert g.inverse("g") == "g^3"

    def test_rejects_broken_tables(self):
        mul = {(a, b): "id" for a in ("id", "a") for b in ("id", "a")}
        with pytest.raises(InputError):
            GroupTable(("id", "a"), mul)
        with pytest.raises(InputError):
            GroupTable(("e", "a"))
        with pytest.raises(InputError):
            GroupTable(("id", "id"))

    def test_missing_table(self):
        g = GroupTable(("id", "a"))
        with pytest.raises(MissingTable):
            g.product("a", "a")

    def test_direct_product_and_json(self):
        g = GroupTable.cyclic(2).direct_product(GroupTable.cyclic(3))
        assert g.order == 6
        h = GroupTable.from_json(g.to_json())
        assert h.elements == g.elements
        assert all(h.product(a, b) == g.product(a, b) for a in g.elements for b in g.elements)


class TestDatumValidation:
    def test_identity_must_have_empty_normal(self):
        ring = RingModel.point()
        c = FixedComponent("p", ring, SplitBundle(ring), SplitBundle.trivial(ring, 1, angle=Fraction(1, 2)))
        with pytest.raises(InputError):
            LocalizationDatum(2, GroupTable.cyclic(2), {"id": (c,), "g": (c,)})

    def test_angle_must_divide_conductor(self):
        ring = RingModel.point()
        plain = FixedComponent("p", ring, SplitBundle(ring), SplitBundle(ring))
        bad = FixedComponent("p", ring, SplitBundle(ring), SplitBundle.trivial(ring, 1, angle=Fraction(1, 3)))
        with pytest.raises(ConductorMismatch):
            LocalizationDatum(2, GroupTable.cyclic(2), {"id": (plain,), "g": (bad,)})

    def test_tangent_must_be_fixed_and_of_right_rank(self):
        ring = RingModel.projective(1)
        x = TruncSeries.variable(ring)
        with pytest.raises(InputError):
            FixedComponent("c", ring, SplitBundle.lines(ring, x, 1, angle=Fraction(1, 2)), SplitBundle(ring))
        with pytest.raises(InputError):
            FixedComponent("c", ring, SplitBundle.lines(ring, x, 3), SplitBundle(ring))

    def test_unknown_element(self):
        with pytest.raises(UnknownElement):
            projective_datum(1, (0, 1), 3).components("h")

    def test_json_round_trip(self):
        d = projective_datum(2, (0, 1, 1), 4)
        e = LocalizationDatum.from_json(d.to_json())
        assert e.to_json() == d.to_json()
        assert all(equivariant_chi_y(e, g) == hodge(2) for g in e.group.elements)


class TestGenera:
    @pytest.mark.parametrize("N", [2, 3, 5, 12])
    def test_p1_closed_form(self, N):
        assert equivariant_chi_y(projective_datum(1, (0, 1), N), "g") == ONE - Y

    def test_isolated_point_class(self):
        # one point with a normal line of angle 1/2: class is (1 + y*(-1))/(1 - (-1)) = (1-y)/2
        ring = RingModel.point()
        c = FixedComponent("p", ring, SplitBundle(ring), SplitBundle.trivial(ring, 1, angle=Fraction(1, 2)))
        assert atiyah_singer_class(c).constant_term() == (ONE - Y) * Fraction(1, 2)

    def test_specializations(self):
        d = projective_datum(2, (0, 1, 2), 3)
        sv = specialized_invariants(d, "g")
        assert (sv.euler, sv.todd, sv.signature) == (3, 1, 1)
        assert sum((euler_characteristic(c) for c in d.components("g")), YCoeff()) == 3

    def test_holomorphic_lefschetz_number_is_one(self):
        # y = 0 of the class gives the trace on H^*(O) = 1 for P^n
        d = projective_datum(3, (0, 1, 1, 4), 6)
        for g in d.group.elements:
            total = sum((td_star_class(c).integrate() for c in d.components(g)), YCoeff())
            assert total == 1

    def test_unnormalized_genus_agrees_on_projective_space(self):
        d = projective_datum(2, (0, 1, 3), 4)
        for g in d.group.elements:
            assert equivariant_chi_y(d, g, normalized=False) == hodge(2)

    def test_unnorm_norm_relation(self):
        d = projective_datum(3, (0, 0, 1, 3), 4)
        assert all(unnorm_norm_check(c) for g in d.group.elements for c in d.components(g))

    def test_point_datum(self):
        assert equivariant_chi_y(point_datum(), IDENTITY) == ONE


class TestTwists:
    def test_trivial_twist_is_rigid(self):
        d = projective_datum(1, (0, 1), 4)
        for c in d.components("g"):
            assert twisted_class(c, SplitBundle.trivial(c.ring)) == atiyah_singer_class(c)

    def test_lefschetz_riemann_roch_for_o_of_minus_one(self):
        # chi(P^1, O(-1)) = 0 equivariantly; g acts on the fiber over e_lambda by zeta^lambda
        d = projective_datum(1, (0, 1), 5)
        for g in d.group.elements:
            total = YCoeff()
            for c in d.components(g):
                x = TruncSeries.variable(c.ring)
                lam = int(c.label[1:])
                L = SplitBundle.lines(c.ring, x.scale(-1) if c.dim else x, 1, Angle(Fraction(lam, 5)))
                total = total + lrr_td_class(c, L).integrate()
            assert total == 0

    def test_genus_twist_by_label(self):
        d = projective_datum(1, (0, 1), 3)
        twist = {c.label: SplitBundle.trivial(c.ring, 2) for c in d.components("g")}
        assert equivariant_chi_y(d, "g", twist=twist) == (ONE - Y) * 2


class TestProducts:
    def test_exterior_product_multiplies_genera(self):
        a = projective_datum(1, (0, 1), 2)
        b = projective_datum(2, (0, 1, 2), 3)
        p = exterior_product(a, b)
        assert p.group.order == 6
        for g in p.group.elements:
            assert equivariant_chi_y(p, g) == hodge(1) * hodge(2)

    def test_delocalized_class_json(self):
        from eqclass.localization import DelocalizedClass

        dc = delocalized_class(projective_datum(1, (0, 1), 3))
        back = DelocalizedClass.from_json(dc.to_json())
        assert back.to_json() == dc.to_json()
        assert dc.degree("g") == ONE - Y


class TestConjugation:
    def test_s3_genera(self):
        d, _ = s3_on_p2()
        for g in d.group.elements:
            assert equivariant_chi_y(d, g) == hodge(2)

    def test_covariance_and_negative_control(self):
        d, relabel = s3_on_p2()
        assert check_conjugation(d, relabel)
        broken = dict(relabel)
        key = next(k for k in broken if k[0] == "s01" and k[1] != "s01")
        broken[key] = {"line": "pt", "pt": "line"}
        assert not check_conjugation(d, broken)

    def test_missing_relabel_fails(self):
        d, _ = s3_on_p2()
        assert not check_conjugation(d, {})

    def test_abelian_needs_no_relabel(self):
        assert check_conjugation(projective_datum(2, (0, 1, 2), 3))

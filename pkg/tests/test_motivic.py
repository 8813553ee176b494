import pytest

from eqclass.builders import projective_datum
from eqclass.errors import InputError
from eqclass.localization import equivariant_chi_y
from eqclass.motivic import Cell, Stratification, chi_c_y_cells, compactification_check, projective_cells
from eqclass.ycoeff import ONE, Y, YCoeff


def test_cells_of_projective_space():
    assert chi_c_y_cells(projective_cells(3)) == YCoeff({0: 1, 1: -1, 2: 1, 3: -1})


@pytest.mark.parametrize("n, weights, N", [(1, (0, 1), 7), (2, (0, 2, 5), 6), (3, (0, 1, 1, 2), 4)])
def test_cells_agree_with_localization(n, weights, N):
    d = projective_datum(n, weights, N)
    for g in d.group.elements:
        assert equivariant_chi_y(d, g) == chi_c_y_cells(projective_cells(n))


def test_compactification_of_affine_line():
    # C = P^1 minus a point
    affine = Stratification((Cell(1),))
    assert compactification_check(chi_c_y_cells(affine), ONE - Y, ONE)
    assert not compactification_check(chi_c_y_cells(affine), ONE - Y, ONE * 2)


def test_disjoint_union_adds():
    a = projective_cells(1)
    b = Stratification((Cell(2, 3),))
    assert chi_c_y_cells(a + b) == chi_c_y_cells(a) + chi_c_y_cells(b)


def test_json_and_validation():
    s = Stratification((Cell(0), Cell(2, 4)))
    assert Stratification.from_json(s.to_json()) == s
    with pytest.raises(InputError):
        Cell(-1)
    with pytest.raises(InputError):
        Stratification.from_json({"strata": [{"count": 1}]})

"""Equivariant characteristic classes and chi_y-genera of finite group actions.

Fixed-point data goes in, exact values come out: every number lives in a
cyclotomic field Q(zeta_N), and the Hirzebruch variable ``y`` is kept symbolic
in :class:`YCoeff`.

>>> from eqclass import projective_datum, equivariant_chi_y
>>> str(equivariant_chi_y(projective_datum(1, (0, 1), 3), "g"))
'1 - y'
"""

from eqclass.builders import point_datum, projective_datum, wproj_cover_datum
from eqclass.bundles import SplitBundle, character, total_class
from eqclass.cyclotomic import Angle, Cyclotomic, root_of_unity
from eqclass.errors import ComputationError, EqclassError, InputError
from eqclass.kernels import BACKEND
from eqclass.localization import (
    IDENTITY,
    DelocalizedClass,
    FixedComponent,
    GroupTable,
    LocalizationDatum,
    atiyah_singer_class,
    check_conjugation,
    delocalized_class,
    equivariant_chi_y,
    exterior_product,
    fibration_pushforward,
    specialized_invariants,
    twisted_class,
)
from eqclass.motivic import Stratification, chi_c_y_cells
from eqclass.quotient import (
    IsolatedDefectDatum,
    WeightVector,
    chi_y_quotient,
    defect_sum,
    wproj_class,
    wproj_genus,
)
from eqclass.series import RingModel, TruncSeries
from eqclass.templates import Template, TemplateKind, compose_template, template_coefficients
from eqclass.ycoeff import YCoeff

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "BACKEND",
    "ComputationError",
    "Cyclotomic",
    "DelocalizedClass",
    "EqclassError",
    "FixedComponent",
    "GroupTable",
    "IDENTITY",
    "InputError",
    "IsolatedDefectDatum",
    "LocalizationDatum",
    "RingModel",
    "SplitBundle",
    "Stratification",
    "Template",
    "TemplateKind",
    "TruncSeries",
    "WeightVector",
    "YCoeff",
    "atiyah_singer_class",
    "character",
    "check_conjugation",
    "chi_c_y_cells",
    "chi_y_quotient",
    "compose_template",
    "defect_sum",
    "delocalized_class",
    "equivariant_chi_y",
    "exterior_product",
    "fibration_pushforward",
    "point_datum",
    "projective_datum",
    "root_of_unity",
    "specialized_invariants",
    "template_coefficients",
    "total_class",
    "twisted_class",
    "wproj_class",
    "wproj_cover_datum",
    "wproj_genus",
]

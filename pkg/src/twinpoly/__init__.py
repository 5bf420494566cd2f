"""Brute-force and closed-form counts of twin irreducible polynomials over F_q."""

from .census import count_all_scalar_shifts, count_tuple, gauss_count, irreducible_bitmap, ShiftTuple
from .closed_form import average_pi3, closed_form_count, pi1, pi2, pi3, pi3_shift
from .field import FieldCtx, FqElem, embed, field_of_order, make_field
from .series import euler_product, prediction, s_series, singular_value

__version__ = "0.1.0"

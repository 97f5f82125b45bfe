from .kernels import BACKEND
from .linform import LinForm, VarId
from .poly import Poly
from .ratfun import (
    ONE,
    ZERO,
    RatFun,
    is_zero,
    rf_arith,
    rf_is_zero,
    rf_subst,
    shift_vars,
    subst_forms,
)
from .textio import parse_ratfun, render_poly, render_ratfun

__all__ = [
    "BACKEND",
    "LinForm",
    "VarId",
    "Poly",
    "RatFun",
    "ONE",
    "ZERO",
    "is_zero",
    "rf_arith",
    "rf_is_zero",
    "rf_subst",
    "shift_vars",
    "subst_forms",
    "parse_ratfun",
    "render_poly",
    "render_ratfun",
]

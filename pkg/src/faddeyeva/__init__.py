"""Faddeyeva function w(z) in double precision, with a near-axis Taylor remedy."""

from .dawson import dawson, dawson_deriv
from .errors import InvalidArgumentError
from .evaluator import EvalResult, Status, w, w_value
from .regions import DEFAULT_PARAMS, TUNING_VERSION, Region, TuningParams, classify, rho

__version__ = "0.1.0"

__all__ = [
    "w",
    "w_value",
    "EvalResult",
    "Status",
    "Region",
    "TuningParams",
    "DEFAULT_PARAMS",
    "TUNING_VERSION",
    "classify",
    "rho",
    "dawson",
    "dawson_deriv",
    "InvalidArgumentError",
]

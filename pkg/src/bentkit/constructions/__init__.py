"""Closed-form character sums, Walsh predictors and Gold-function criteria."""

from .closed import GoldValue, bivariate_quadratic_sum, gold_walsh_closed, quadratic_char_sum
from .restrict import NotApplicable, restrict_poly

__all__ = [
    "GoldValue",
    "NotApplicable",
    "bivariate_quadratic_sum",
    "gold_walsh_closed",
    "quadratic_char_sum",
    "restrict_poly",
]

"""Exact algebra for the two-partition Hodge-integral generating series.

Partitions, symmetric-group characters, Schur and skew Schur
specializations, the quantities W_mu and W_{mu,nu}, the cut-and-join
operator and the connected coefficients G_{mu+,mu-} predicted by the
disconnected series, all as exact rational functions.
"""
from .arith import GaussianRational, LaurentPoly, RatFunc, rf_equal, rf_eval, substitute_inverse
from .partitions import Partition
from .series import g_predict, rhs_series, series_exp, series_log
from .wzw import w_one, w_pair

__all__ = [
    "GaussianRational",
    "LaurentPoly",
    "RatFunc",
    "Partition",
    "g_predict",
    "rf_equal",
    "rf_eval",
    "rhs_series",
    "series_exp",
    "series_log",
    "substitute_inverse",
    "w_one",
    "w_pair",
]

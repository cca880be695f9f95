"""Exact bounds on iterated sumset sizes |hA| from Plünnecke's and Macaulay's theorems."""

from .arith import Enclosure, Ordering, binom_int, binom_rat, cmp_pow
from .macaulay import BinRep, is_o_sequence, min_predecessor, represent, successor
from .realbinom import chain_upper, condensed_bounds, plunnecke_bounds, solve_x
from .sumset import FiniteSet, bound_report, check_bounds, iterate_sumsets, parse_set
from .theta import argmax_h, min_x_threshold, region_check, theta_cmp, theta_limit, theta_pow

__version__ = "0.1.0"

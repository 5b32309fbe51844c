"""Exact counting of standard Young tableaux with walls, staircase lattice
paths and their generating functions."""

from .arith import Fraction, binomial, catalan
from .paths import LatticePath, ReversePartition, count_weakly_above, count_weakly_below
from .series import TruncatedSeries
from .tableaux import WallTableau, YoungBuilding, enumerate_tableaux, periodic_building
from .tutte import BivariatePolynomial, tutte_polynomial

__version__ = "0.1.0"

__all__ = [
    "Fraction",
    "binomial",
    "catalan",
    "LatticePath",
    "ReversePartition",
    "count_weakly_above",
    "count_weakly_below",
    "TruncatedSeries",
    "WallTableau",
    "YoungBuilding",
    "enumerate_tableaux",
    "periodic_building",
    "BivariatePolynomial",
    "tutte_polynomial",
]

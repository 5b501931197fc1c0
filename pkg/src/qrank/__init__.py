"""Exact truncated q-series arithmetic and checks of rank generating function identities."""

from qrank.coeff_rings import CycloNum, LaurentPoly
from qrank.qseries import QSeries
from qrank.results import CheckResult, Mismatch

__version__ = "0.1.0"

__all__ = ["CycloNum", "LaurentPoly", "QSeries", "CheckResult", "Mismatch", "__version__"]

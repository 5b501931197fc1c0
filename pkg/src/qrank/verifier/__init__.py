"""Named verification checks, the Dyson oracle checks and report output."""

from qrank.verifier import checks as _checks  # noqa: F401  (registers every check)
from qrank.verifier.dyson import dyson_oracle
from qrank.verifier.registry import REGISTRY, CheckSpec, Comparison, run_all, run_check

__all__ = ["REGISTRY", "CheckSpec", "Comparison", "run_all", "run_check", "dyson_oracle"]

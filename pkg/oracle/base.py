"""
Base types shared by the brute-force estimators.
"""

from enum import Enum
from typing import NamedTuple


class OracleConvergenceError(RuntimeError):
    """Adaptive quadrature ran out of its panel budget before reaching the tolerance."""


class IntegralKind(Enum):
    """
    Which Euclidean or dyadic form an estimator targets.
    """
    POSITION = "position"
    ENERGY = "energy"


class OracleEstimate(NamedTuple):
    """Standard output of every oracle."""
    value: float
    bound: float  # truncation bound (series), error estimate (quadrature) or standard error (Monte Carlo)
    n: int  # terms, panels or samples used

    def to_dict(self) -> dict:
        return {"bound": self.bound, "n": self.n, "value": self.value}

    def covers(self, exact: float, width: float = 1.0, slack: float = 0.0) -> bool:
        """True when |value - exact| <= width * bound + slack."""
        return abs(self.value - exact) <= width * self.bound + slack

"""
Base Check Interface

This module defines the abstract base class every identity check inherits
from. A check evaluates one family of closed-form identities against an
independent path and reports the largest deviation it saw.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import NamedTuple

import config


class CheckStatus(Enum):
    """
    Enumeration of possible check outcomes.
    """
    PASS = "PASS"  # every deviation within tolerance
    FAIL = "FAIL"  # at least one deviation above tolerance
    ERROR = "ERROR"  # the check raised or timed out


class CheckContext(NamedTuple):
    """Parameters shared by every check of a verification run."""
    s: float = 0.25
    levels: tuple[int, int] = (-3, 3)
    tolerance: float = config.EXACT_TOLERANCE
    oracle_tolerance: float = config.ORACLE_TOLERANCE
    seed: int = config.DEFAULT_SEED
    samples: int = config.STRATIFIED_SAMPLES


class CheckResult(NamedTuple):
    """Standard output of every check."""
    name: str
    status: CheckStatus
    max_deviation: float
    tolerance: float
    detail: str = ""


class BaseCheck(ABC):
    """
    Base interface for all identity checks.

    Each check must define:
        - name
        - description

    And must implement:
        - run(ctx: CheckContext) -> CheckResult
    """

    def __init__(self, name: str, description: str):
        self._name = name
        self._description = description

    # ---- getters (read-only) ----

    @property
    def name(self) -> str:
        return self._name

    @property
    def description(self) -> str:
        return self._description

    # ---- helpers ----

    def result(self, deviation: float, tolerance: float, detail: str = "") -> CheckResult:
        status = CheckStatus.PASS if deviation <= tolerance else CheckStatus.FAIL
        return CheckResult(self._name, status, float(deviation), float(tolerance), detail)

    def combine(self, *results: CheckResult) -> CheckResult:
        """Merge sub-results measured against different tolerances (worst ratio wins)."""
        worst = max(results, key=lambda r: r.max_deviation / max(r.tolerance, 1e-300))
        failed = [r.detail for r in results if r.status is not CheckStatus.PASS]
        status = CheckStatus.FAIL if failed else CheckStatus.PASS
        detail = "; ".join(failed) if failed else "; ".join(r.detail for r in results if r.detail)
        return CheckResult(self._name, status, worst.max_deviation, worst.tolerance, detail)

    # ---- required method ----

    @abstractmethod
    def run(self, ctx: CheckContext) -> CheckResult:
        """
        Evaluate the identity family.

        :param ctx: CheckContext with s, level range, tolerances and seed
        :return: CheckResult(name, status, max_deviation, tolerance, detail)
        """
        pass

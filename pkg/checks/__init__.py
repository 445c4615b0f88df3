"""
Registry of identity checks run by ``verify-lemmas``.
"""

from checks.base_check import BaseCheck, CheckContext, CheckResult, CheckStatus
from checks.executor import check_label, execute_checks_parallel, load_check_class
from checks.loader import REGISTRY_PATH, get_checks_to_run, load_check_definitions

__all__ = [
    "BaseCheck",
    "CheckContext",
    "CheckResult",
    "CheckStatus",
    "REGISTRY_PATH",
    "check_label",
    "execute_checks_parallel",
    "get_checks_to_run",
    "load_check_class",
    "load_check_definitions",
]

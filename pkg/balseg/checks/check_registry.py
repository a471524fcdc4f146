from typing import Dict, Any, List
from .base_check import BaseCheck


class CheckRegistry:
    """Registry for the verification suites, in execution order"""

    def __init__(self):
        self.checks: Dict[str, BaseCheck] = {}
        self._register_default_checks()

    def _register_default_checks(self):
        from .golden import GoldenTablesCheck
        from .oracle import OracleCheck
        from .identities import SymmetryCheck, RowSumCheck, CountingIdentityCheck
        from .bijections import BijectionCheck
        from .generating import GeneratingFunctionCheck, ProfileCheck
        self.register(GoldenTablesCheck())
        self.register(OracleCheck())
        self.register(SymmetryCheck())
        self.register(RowSumCheck())
        self.register(CountingIdentityCheck())
        self.register(BijectionCheck())
        self.register(GeneratingFunctionCheck())
        self.register(ProfileCheck())

    def register(self, check: BaseCheck) -> None:
        self.checks[check.name] = check

    def get(self, name: str) -> BaseCheck:
        if name not in self.checks:
            raise KeyError(f"Check '{name}' not found")
        return self.checks[name]

    def list_checks(self) -> List[Dict[str, Any]]:
        return [check.to_dict() for check in self.checks.values()]

    def has_check(self, name: str) -> bool:
        return name in self.checks

    def get_check_count(self) -> int:
        return len(self.checks)


check_registry = CheckRegistry()

"""
Verify Tool - runs every registered check suite
"""
from typing import Dict, Any
import logging

from .base_tool import BaseTool
from ..checks import VerifyConfig, check_registry

logger = logging.getLogger(__name__)


class VerifyTool(BaseTool):
    params_model = VerifyConfig

    def get_name(self) -> str:
        return "verify"

    def get_description(self) -> str:
        return "Self-verification: oracle, symmetry, row sums, identities, bijections, generating functions, profiles"

    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        config = self.parse_params(params)
        suites = [check.execute(config) for check in check_registry.checks.values()]
        all_passed = all(suite["status"] != "fail" for suite in suites)
        logger.info(f"{'✓' if all_passed else '✗'} verify: {sum(s['status'] == 'pass' for s in suites)} suites passed")
        return {
            "max_L": str(config.max_L),
            "brute_max": str(config.brute_max),
            "h_max": str(config.h_max),
            "suites": suites,
            "all_passed": all_passed,
        }

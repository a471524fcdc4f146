"""
Base Check Class
A check is a named self-verification suite run by the verify command
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterator, List, Optional, Tuple
import logging

from pydantic import BaseModel, Field, ValidationError

from ..counting import CountingEvaluator
from ..errors import InvalidArgumentError

logger = logging.getLogger(__name__)

# failures listed per suite in the report
MAX_REPORTED_FAILURES = 10

Case = Tuple[bool, str]


class VerifyConfig(BaseModel):
    max_L: int = Field(default=12, ge=0, description="Largest L for table, symmetry and identity checks")
    brute_max: int = Field(default=12, ge=0, description="Largest L checked against brute-force enumeration (0 skips)")
    h_max: int = Field(default=6, ge=0, description="Largest h for generating function and asymptotic checks")


def parse_verify_config(params: Optional[Dict[str, Any]]) -> VerifyConfig:
    try:
        return VerifyConfig.model_validate(params or {})
    except ValidationError as e:
        raise InvalidArgumentError(f"Invalid verify parameters: {e}") from e


class BaseCheck(ABC):
    """Base class for all verification suites"""

    name: str
    description: str

    def skip_reason(self, config: VerifyConfig) -> Optional[str]:
        """Reason to skip this suite under config, None to run it"""
        return None

    @abstractmethod
    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        """Yield (passed, description) per checked case"""

    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        config = params if isinstance(params, VerifyConfig) else parse_verify_config(params)
        reason = self.skip_reason(config)
        if reason:
            logger.info(f"⏭ {self.name}: skipped ({reason})")
            return {"name": self.name, "status": "skipped", "cases": "0", "failures": [], "message": reason}

        evaluator = CountingEvaluator()
        total = 0
        failures: List[str] = []
        for passed, description in self.cases(config, evaluator):
            total += 1
            if not passed:
                failures.append(description)
        status = "fail" if failures else "pass"
        log = logger.info if status == "pass" else logger.error
        log(f"{'✓' if status == 'pass' else '✗'} {self.name}: {total - len(failures)}/{total} cases passed")
        return {
            "name": self.name,
            "status": status,
            "cases": str(total),
            "failures": failures[:MAX_REPORTED_FAILURES],
        }

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "input_schema": VerifyConfig.model_json_schema(),
        }

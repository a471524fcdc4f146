"""
Asymptotic Tool - leading coefficients and periodic residual of s(.,h) or p(.,h)
"""
from typing import Dict, Any, Literal
import logging

from pydantic import BaseModel, Field

from .base_tool import BaseTool
from ..counting import CountingEvaluator
from ..ratfunc import asymptotic_profile

logger = logging.getLogger(__name__)


class AsymptoticParams(BaseModel):
    family: Literal["s", "p"]
    h: int = Field(ge=2)


class AsymptoticTool(BaseTool):
    params_model = AsymptoticParams

    def get_name(self) -> str:
        return "asymptotic"

    def get_description(self) -> str:
        return "Exact decomposition of s(L,h) (quadratic) or p(L,h) (linear) plus a periodic residual"

    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        try:
            args = self.parse_params(params)
            profile = asymptotic_profile(args.family, args.h, CountingEvaluator())
            logger.info(f"✓ asymptotic: {args.family}(.,{args.h}) alpha={profile.alpha}, period={profile.period}")
            return profile.to_dict()
        except Exception as e:
            logger.error(f"✗ asymptotic failed: {str(e)}")
            raise

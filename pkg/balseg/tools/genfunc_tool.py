"""
GenFunc Tool - generating function S_h(X) or P_h(X) and its first coefficients
"""
from typing import Dict, Any, Literal
import logging

from pydantic import BaseModel, Field

from .base_tool import BaseTool
from ..counting import CountingEvaluator
from ..ratfunc import format_fraction, generating_function, series_coefficients

logger = logging.getLogger(__name__)


class GenFuncParams(BaseModel):
    family: Literal["s", "p"]
    h: int = Field(ge=0)
    terms: int = Field(default=10, ge=0, description="Highest power of X to expand")


class GenFuncTool(BaseTool):
    params_model = GenFuncParams

    def get_name(self) -> str:
        return "genfunc"

    def get_description(self) -> str:
        return "Rational generating function of s(.,h) or p(.,h) with its series coefficients"

    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        try:
            args = self.parse_params(params)
            gf = generating_function(args.family, args.h, CountingEvaluator())
            coefficients = series_coefficients(gf, args.terms)
            logger.info(f"✓ genfunc: {args.family.upper()}_{args.h}, numerator degree {gf.num.degree}")
            return {
                "family": args.family,
                "h": str(args.h),
                **gf.to_dict(),
                "coefficients": [format_fraction(c) for c in coefficients],
            }
        except Exception as e:
            logger.error(f"✗ genfunc failed: {str(e)}")
            raise

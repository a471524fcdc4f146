"""
Count Tool - exact s(L,h) or p(L,h) for any integers L, h
"""
from typing import Dict, Any, Literal
import logging

from pydantic import BaseModel, Field

from .base_tool import BaseTool
from ..counting import CountingEvaluator

logger = logging.getLogger(__name__)


class CountParams(BaseModel):
    family: Literal["s", "p"] = Field(description="s: balanced words, p: balanced palindromes")
    L: int = Field(description="Length (any integer)")
    h: int = Field(description="Height (any integer)")


class CountTool(BaseTool):
    """Tool for counting balanced words or palindromes of given length and height"""

    params_model = CountParams

    def get_name(self) -> str:
        return "count"

    def get_description(self) -> str:
        return "Number of balanced words (s) or balanced palindromes (p) of length L and height h"

    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        """Execute the count operation"""
        try:
            args = self.parse_params(params)
            evaluator = CountingEvaluator()
            count = evaluator.s(args.L, args.h) if args.family == "s" else evaluator.p(args.L, args.h)
            logger.info(f"✓ count: {args.family}({args.L},{args.h}) = {count} ({evaluator.cache_size} memo entries)")
            return {
                "family": args.family,
                "L": str(args.L),
                "h": str(args.h),
                "count": str(count),
            }
        except Exception as e:
            logger.error(f"✗ count failed: {str(e)}")
            raise

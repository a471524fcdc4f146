"""
Table Tool - triangular table of s(L,h) or p(L,h) with row totals
"""
from typing import Dict, Any, Literal
import logging

from pydantic import BaseModel, Field

from .base_tool import BaseTool
from ..counting import CountingEvaluator, p_total, s_total

logger = logging.getLogger(__name__)


class TableParams(BaseModel):
    family: Literal["s", "p"]
    max_L: int = Field(default=10, ge=0, description="Last row of the table")


class TableTool(BaseTool):
    params_model = TableParams

    def get_name(self) -> str:
        return "table"

    def get_description(self) -> str:
        return "Rows L = 0..max_L of s(L,h) or p(L,h) for 0 <= h <= L, with the closed-form row totals"

    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        try:
            args = self.parse_params(params)
            evaluator = CountingEvaluator()
            if args.family == "s":
                rows, total = evaluator.s_table(args.max_L), s_total
            else:
                rows, total = evaluator.p_table(args.max_L), p_total
            logger.info(f"✓ table: {args.family} up to L={args.max_L}")
            return {
                "family": args.family,
                "max_L": str(args.max_L),
                "rows": [[str(v) for v in row] for row in rows],
                "totals": [str(total(L)) for L in range(args.max_L + 1)],
            }
        except Exception as e:
            logger.error(f"✗ table failed: {str(e)}")
            raise

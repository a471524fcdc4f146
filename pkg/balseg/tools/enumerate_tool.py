"""
Enumerate Tool - list balanced words or palindromes, optionally drawn as paths
"""
from typing import Dict, Any, Literal, Optional
import logging

from pydantic import BaseModel, Field

from .base_tool import BaseTool
from ..config import load_settings
from ..errors import ResourceCapError
from ..words import enumerate_balanced, enumerate_balanced_palindromes, render_path

logger = logging.getLogger(__name__)


class EnumerateParams(BaseModel):
    L: int = Field(ge=0, description="Word length")
    h: int = Field(ge=0, description="Word height (number of 1s)")
    palindromes: bool = Field(default=False, description="Only balanced palindromes")
    prefix: str = Field(default="", pattern=r"^[01]*$")
    suffix: str = Field(default="", pattern=r"^[01]*$")
    render: Optional[Literal["naive", "standard"]] = Field(default=None, description="Attach ASCII paths")
    cap: Optional[int] = Field(default=None, ge=0, description="Largest accepted L (default BALSEG_CAP or 24)")


class EnumerateTool(BaseTool):
    params_model = EnumerateParams

    def get_name(self) -> str:
        return "enumerate"

    def get_description(self) -> str:
        return "Sorted list of balanced words (or palindromes) of length L and height h"

    def execute(self, params: Dict[str, Any]) -> Dict[str, Any]:
        try:
            args = self.parse_params(params)
            cap = args.cap if args.cap is not None else load_settings().enumeration_cap
            if args.L > cap:
                raise ResourceCapError(f"L={args.L} exceeds the enumeration cap {cap}")
            if args.palindromes:
                if args.prefix or args.suffix:
                    logger.warning("prefix/suffix are ignored when enumerating palindromes")
                words = enumerate_balanced_palindromes(args.L, args.h)
            else:
                words = enumerate_balanced(args.L, args.h, args.prefix, args.suffix)
            logger.info(f"✓ enumerate: {len(words)} words of length {args.L}, height {args.h}")
            result = {
                "L": str(args.L),
                "h": str(args.h),
                "palindromes": args.palindromes,
                "count": str(len(words)),
                "words": words,
            }
            if args.render:
                result["paths"] = [render_path(w, args.render) for w in words]
            return result
        except Exception as e:
            logger.error(f"✗ enumerate failed: {str(e)}")
            raise

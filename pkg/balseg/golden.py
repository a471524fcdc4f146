"""
Golden fixtures: sample tables of s(L,h), p(L,h) and their generating functions
"""
import copy
import json
import os
from functools import lru_cache
from typing import Any, Dict

from .ratfunc import Polynomial, RationalFunction

GOLDEN_PATH = os.path.normpath(os.path.join(os.path.dirname(__file__), 'metadata', 'golden_tables.json'))


@lru_cache(maxsize=1)
def _read_golden_tables() -> Dict[str, Any]:
    if not os.path.exists(GOLDEN_PATH):
        raise FileNotFoundError(f"Golden tables not found: {GOLDEN_PATH}")
    with open(GOLDEN_PATH, 'r', encoding='utf-8') as f:
        return json.load(f)


def load_golden_tables() -> Dict[str, Any]:
    """A fresh copy of the fixture tables; callers may mutate it"""
    return copy.deepcopy(_read_golden_tables())


def golden_generating_function(family: str, h: int) -> RationalFunction:
    """Tabulated S_h / P_h for 2 <= h <= 6"""
    entry = load_golden_tables()[f"{family}_generating_functions"][str(h)]
    return RationalFunction.over_factors(Polynomial(entry["numerator"]), entry["factors"])

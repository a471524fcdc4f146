from typing import Callable, Iterator, List, Optional

from .base_check import BaseCheck, Case, VerifyConfig
from ..counting import CountingEvaluator
from ..words import (
    Word, complement, enumerate_balanced, enumerate_balanced_palindromes, is_balanced,
    is_palindrome, lift_00, lift_01, lift_10, lift_11, phi, reverse, theta, word_type,
)


def _maps_onto(source: List[Word], target: List[Word], lift: Callable[[Word], Word]) -> bool:
    """theta is one-to-one from source onto target, and lift is its inverse on target"""
    if sorted(theta(w) for w in source) != target:
        return False
    members = set(source)
    return all(lift(w) in members and theta(lift(w)) == w for w in target)


class BijectionCheck(BaseCheck):
    name = "bijections"
    description = "theta bijections between affix classes, phi/theta balance and palindrome preservation"

    def skip_reason(self, config: VerifyConfig) -> Optional[str]:
        if config.brute_max < 1:
            return "brute_max is 0"
        return None

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        top = config.brute_max
        for L in range(1, top + 1):
            for h in range(L + 1):
                yield from self._affix_cases(L, h)
        for L in range(top + 1):
            for h in range(L + 1):
                yield from self._word_cases(L, h)

    def _affix_cases(self, L: int, h: int) -> Iterator[Case]:
        if L >= 2 * h + 1:
            yield (_maps_onto(enumerate_balanced(L, h, "0", "0"), enumerate_balanced(L - h - 1, h), lift_00),
                   f"theta: S_00({L},{h}) -> S({L - h - 1},{h}) is not a bijection")
            yield (_maps_onto(enumerate_balanced_palindromes(L, h, "0"),
                              enumerate_balanced_palindromes(L - h - 1, h), lift_00),
                   f"theta: P_0({L},{h}) -> P({L - h - 1},{h}) is not a bijection")
        if L >= 2 * h and L - h >= 1:
            yield (_maps_onto(enumerate_balanced(L, h, "0", "1"), enumerate_balanced(L - h, h, "", "1"), lift_01),
                   f"theta: S_01({L},{h}) -> S_e1({L - h},{h}) is not a bijection")
            yield (_maps_onto(enumerate_balanced(L, h, "1", "0"), enumerate_balanced(L - h, h, "1", ""), lift_10),
                   f"theta: S_10({L},{h}) -> S_1e({L - h},{h}) is not a bijection")
        if L >= 2 * h - 1:
            yield (_maps_onto(enumerate_balanced(L, h, "1", "1"), enumerate_balanced(L - h + 1, h, "1", "1"), lift_11),
                   f"theta: S_11({L},{h}) -> S_11({L - h + 1},{h}) is not a bijection")
            yield (_maps_onto(enumerate_balanced_palindromes(L, h, "1"),
                              enumerate_balanced_palindromes(L - h + 1, h, "1"), lift_11),
                   f"theta: P_1({L},{h}) -> P_1({L - h + 1},{h}) is not a bijection")

    def _word_cases(self, L: int, h: int) -> Iterator[Case]:
        words = enumerate_balanced(L, h)
        yield (sorted(complement(w) for w in words) == enumerate_balanced(L, L - h),
               f"complement: S({L},{h}) -> S({L},{L - h}) is not a bijection")
        for w in words:
            yield is_balanced(phi(w)) and is_balanced(theta(w)), f"phi/theta break balance of {w}"
            yield theta(reverse(w)) == reverse(theta(w)), f"theta does not commute with reversal on {w}"
            if is_palindrome(w):
                yield is_palindrome(theta(w)), f"theta({w}) is not a palindrome"
            if w.endswith("1"):
                yield theta(phi(w)) == w, f"theta(phi({w})) != {w}"
                if w.startswith("0") and word_type(w) == 0:
                    yield phi(theta(w)) == w, f"phi(theta({w})) != {w}"

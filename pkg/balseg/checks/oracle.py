from typing import Iterator, Optional

from .base_check import BaseCheck, Case, VerifyConfig
from ..counting import CountingEvaluator
from ..words import enumerate_balanced, enumerate_balanced_palindromes

# the 2^L filter is only run up to this length
NAIVE_MAX_L = 12


class OracleCheck(BaseCheck):
    name = "oracle"
    description = "Recurrence counts equal brute-force enumeration; pruned enumeration equals the 2^L filter"

    def skip_reason(self, config: VerifyConfig) -> Optional[str]:
        if config.brute_max < 1:
            return "brute_max is 0"
        return None

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        for L in range(config.brute_max + 1):
            for h in range(L + 1):
                words = enumerate_balanced(L, h)
                palindromes = enumerate_balanced_palindromes(L, h)
                yield evaluator.s(L, h) == len(words), f"s({L},{h}) != #S({L},{h}) = {len(words)}"
                yield evaluator.p(L, h) == len(palindromes), f"p({L},{h}) != #P({L},{h}) = {len(palindromes)}"
                if L <= NAIVE_MAX_L:
                    naive = enumerate_balanced(L, h, method="naive")
                    yield words == naive, f"pruned and naive enumeration differ at ({L},{h})"

from typing import Iterator

from .base_check import BaseCheck, Case, VerifyConfig
from ..counting import CountingEvaluator
from ..golden import golden_generating_function, load_golden_tables
from ..ratfunc import build_P_h, build_S_h

# tables are tabulated for 0 <= h <= L <= 10 and generating functions for 2 <= h <= 6
GOLDEN_MAX_L = 10
GOLDEN_H_RANGE = range(2, 7)


class GoldenTablesCheck(BaseCheck):
    name = "golden_tables"
    description = "Reproduce the tabulated values of s(L,h), p(L,h), S_h(X) and P_h(X)"

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        golden = load_golden_tables()
        top = min(config.max_L, GOLDEN_MAX_L)
        for family, table in (("s", evaluator.s_table(top)), ("p", evaluator.p_table(top))):
            for L, row in enumerate(table):
                expected = tuple(golden[f"{family}_table"][L])
                yield row == expected, f"{family} row {L}: got {row}, expected {expected}"
        for h in GOLDEN_H_RANGE:
            if h > config.h_max:
                break
            yield build_S_h(h, evaluator) == golden_generating_function("s", h), f"S_{h} differs from table"
            yield build_P_h(h, evaluator) == golden_generating_function("p", h), f"P_{h} differs from table"

from fractions import Fraction
from typing import Iterator

from .base_check import BaseCheck, Case, VerifyConfig
from ..counting import CountingEvaluator, p_total, s_L2_explicit, s_total
from ..ratfunc import leading_coefficients


class SymmetryCheck(BaseCheck):
    name = "symmetry"
    description = "s(L,h) = s(L,L-h), p(L,h) = p(L,L-h) and p(L,h) <= s(L,h)"

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        s, p = evaluator.s, evaluator.p
        for L in range(config.max_L + 1):
            for h in range(L + 1):
                yield s(L, h) == s(L, L - h), f"s({L},{h}) != s({L},{L - h})"
                yield p(L, h) == p(L, L - h), f"p({L},{h}) != p({L},{L - h})"
                yield p(L, h) <= s(L, h), f"p({L},{h}) > s({L},{h})"


class RowSumCheck(BaseCheck):
    name = "row_sums"
    description = "Row sums equal the totient closed forms; s(L,2) equals its floor formula"

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        for L in range(config.max_L + 1):
            s_row = sum(evaluator.s(L, h) for h in range(L + 1))
            p_row = sum(evaluator.p(L, h) for h in range(L + 1))
            yield s_row == s_total(L), f"sum_h s({L},h) = {s_row} != s({L}) = {s_total(L)}"
            yield p_row == p_total(L), f"sum_h p({L},h) = {p_row} != p({L}) = {p_total(L)}"
            yield s_L2_explicit(L) == evaluator.s(L, 2), f"floor formula for s({L},2) fails"


class CountingIdentityCheck(BaseCheck):
    name = "identities"
    description = "Weighted row sums, shifted column differences, s_11 periodicity, parity vanishing, leading constants"

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        s, p = evaluator.s, evaluator.p
        for L in range(1, config.max_L + 1):
            weighted = sum(s(L, h) * h for h in range(L))
            yield weighted == Fraction(L, 2) * (s_total(L) - 2), f"weighted row sum fails at L={L}"
        for h in range(1, config.max_L + 1):
            diff = sum(s(L, h) for L in range(h, 2 * h)) - sum(s(L, h) for L in range(h))
            expected = s_total(h) + s_total(h - 1) - (h + 1)
            yield diff == expected, f"column difference fails at h={h}: {diff} != {expected}"
        for L in range(2, config.max_L + 1):
            for h in range(2, L + 1):
                reduced = h + (L - h) % (h - 1)
                yield (evaluator.s_affix(L, h, "1", "1") == evaluator.s_affix(reduced, h, "1", "1"),
                       f"s_11({L},{h}) != s_11({reduced},{h})")
        for L in range(0, 2 * config.max_L + 1, 2):
            for h in range(1, L + 1, 2):
                yield p(L, h) == 0, f"p({L},{h}) = {p(L, h)} but L even, h odd"
        for h in range(2, config.h_max + 1):
            alpha, beta = leading_coefficients("s", h)
            yield (alpha == Fraction(s_total(h - 1) - 1, h * (h * h - 1))
                   and beta == Fraction(s_total(h) - s_total(h - 1), h * (h + 1)),
                   f"s leading constants disagree with s(h), s(h-1) at h={h}")
            alpha_p, _ = leading_coefficients("p", h)
            column = sum(p(h - 1, r) for r in range(h - 1))
            yield alpha_p == Fraction(column, h * h - 1), f"p leading constant disagrees at h={h}"

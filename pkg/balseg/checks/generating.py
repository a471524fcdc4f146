from typing import Iterator

from .base_check import BaseCheck, Case, VerifyConfig
from ..counting import CountingEvaluator, s_total
from ..errors import InternalInconsistencyError
from ..ratfunc import (
    asymptotic_profile, build_P_h, build_S_h, leading_coefficients, series_coefficients,
)

# series terms compared per generating function, at least this many
MIN_SERIES_TERMS = 60


class GeneratingFunctionCheck(BaseCheck):
    name = "generating_functions"
    description = "Series coefficients of S_h, P_h equal the counts; numerator degree bounds; F_h(-1) = 0 for odd h"

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        terms = max(MIN_SERIES_TERMS, 10 * config.max_L)
        for h in range(config.h_max + 1):
            S, P = build_S_h(h, evaluator), build_P_h(h, evaluator)
            s_series = series_coefficients(S, terms)
            p_series = series_coefficients(P, terms)
            yield (all(s_series[L] == evaluator.s(L, h) for L in range(terms + 1)),
                   f"S_{h} series disagrees with s(L,{h})")
            yield (all(p_series[L] == evaluator.p(L, h) for L in range(terms + 1)),
                   f"P_{h} series disagrees with p(L,{h})")
            if h < 2:
                continue
            yield S.num.degree <= 3 * h - 2, f"deg F_{h} = {S.num.degree} > {3 * h - 2}"
            yield P.num.degree <= 2 * h - 2, f"deg G_{h} = {P.num.degree} > {2 * h - 2}"
            yield S.num(1) == 2 * (s_total(h - 1) - 1), f"F_{h}(1) != 2(s({h - 1}) - 1)"
            alpha, _ = leading_coefficients("s", h)
            yield S.num(1) == 2 * h * (h * h - 1) * alpha, f"F_{h}(1) disagrees with alpha"
            if h % 2:
                yield S.num(-1) == 0, f"F_{h}(-1) = {S.num(-1)} != 0"


class ProfileCheck(BaseCheck):
    name = "profiles"
    description = "Asymptotic profiles reconstruct s(L,h) and p(L,h) exactly over five periods"

    def cases(self, config: VerifyConfig, evaluator: CountingEvaluator) -> Iterator[Case]:
        for h in range(2, config.h_max + 1):
            for family, count in (("s", evaluator.s), ("p", evaluator.p)):
                try:
                    profile = asymptotic_profile(family, h, evaluator)
                except InternalInconsistencyError as e:
                    yield False, str(e)
                    continue
                yield profile.alpha > 0, f"alpha({family},{h}) = {profile.alpha} is not positive"
                yield (all(profile.reconstruct(L) == count(L, h) for L in range(5 * profile.period + 1)),
                       f"profile {family}(.,{h}) does not reconstruct the counts")

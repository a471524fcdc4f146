"""
Exact counts of balanced words and balanced palindromes

s(L, h) and p(L, h) are defined on all of Z^2:
    0                     if L < 0, or L = 0 and h != 0
    1                     if L = 0 and h = 0
    #S(L, h mod L)        otherwise (resp. #P for p)

Both are evaluated from their recurrences with a per-evaluator memo. The
evaluation walks an explicit work stack, so arbitrarily deep recurrences do
not touch the interpreter recursion limit.
"""
import logging
from typing import Dict, List, Optional, Tuple

from .errors import InternalInconsistencyError, InvalidArgumentError
from .numtheory import totient_sieve

logger = logging.getLogger(__name__)

CountKey = Tuple[int, int]
CountTable = Tuple[Tuple[int, ...], ...]


def _s_normal(L: int, h: int) -> CountKey:
    if L <= 0:
        return L, h
    h %= L
    return L, min(h, L - h)


def _s_base(L: int, h: int) -> Optional[int]:
    """Value of a normalized s-key that needs no recurrence, else None"""
    if L < 0:
        return 0
    if L == 0:
        return 1 if h == 0 else 0
    if h == 0:
        return 1
    return None


def _p_normal(L: int, h: int) -> CountKey:
    if L > 0 and (h < 0 or h > L):
        h %= L
    return L, h


def _p_base(L: int, h: int) -> Optional[int]:
    if L < 0:
        return 0
    if L == 0:
        return 1 if h == 0 else 0
    if h == 0 or h == L:
        return 1
    return None


class CountingEvaluator:
    """
    Memoized evaluator for s(L, h) and p(L, h).

    The memo is private to the instance: do not share one evaluator between
    threads while it is still filling up. Distinct evaluators are independent.
    """

    def __init__(self):
        self._s_cache: Dict[CountKey, int] = {}
        self._p_cache: Dict[CountKey, int] = {}

    @property
    def cache_size(self) -> int:
        return len(self._s_cache) + len(self._p_cache)

    def s(self, L: int, h: int) -> int:
        """
        Number of balanced words of length L and height h (extended to Z^2).

        For the normalized key (0 < h <= L/2):
            s(L,h) = s(L-h-1,h) + s(L-h,h) - s(L-2h-1,h) + s(h-1,L-2) + s(h-1,L-1)
        """
        key = _s_normal(L, h)
        base = _s_base(*key)
        if base is not None:
            return base
        cache = self._s_cache
        stack = [key]
        while stack:
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            n, k = top
            terms = (
                _s_normal(n - k - 1, k),
                _s_normal(n - k, k),
                _s_normal(n - 2 * k - 1, k),
                _s_normal(k - 1, n - 2),
                _s_normal(k - 1, n - 1),
            )
            values: List[int] = []
            missing: List[CountKey] = []
            for term in terms:
                value = _s_base(*term)
                if value is None:
                    value = cache.get(term)
                if value is None:
                    missing.append(term)
                else:
                    values.append(value)
            if missing:
                stack.extend(missing)
                continue
            a, b, c, d, e = values
            cache[top] = a + b - c + d + e
            stack.pop()
        return cache[key]

    def p(self, L: int, h: int) -> int:
        """
        Number of balanced palindromes of length L and height h (extended to Z^2).

        For 0 < h < L: p(L,h) = p(L-h-1,h) + p(h-1,L-1)
        """
        key = _p_normal(L, h)
        base = _p_base(*key)
        if base is not None:
            return base
        cache = self._p_cache
        stack = [key]
        while stack:
            top = stack[-1]
            if top in cache:
                stack.pop()
                continue
            n, k = top
            total = 0
            missing: List[CountKey] = []
            for term in (_p_normal(n - k - 1, k), _p_normal(k - 1, n - 1)):
                value = _p_base(*term)
                if value is None:
                    value = cache.get(term)
                if value is None:
                    missing.append(term)
                else:
                    total += value
            if missing:
                stack.extend(missing)
                continue
            cache[top] = total
            stack.pop()
        return cache[key]

    def s_affix(self, L: int, h: int, first: str, last: str) -> int:
        """s_{first,last}(L, h): balanced words of length L, height h, with given first and last letter"""
        _check_affix_domain(L, h)
        if first not in ("0", "1") or last not in ("0", "1"):
            raise InvalidArgumentError(f"Affix symbols must be '0' or '1', got {first!r}, {last!r}")
        s00 = self.s(L - h - 1, h)
        s11 = self.s(h - 1, L - 1)
        if first == last:
            return s00 if first == "0" else s11
        mixed = self.s(L, h) - s00 - s11
        if mixed % 2:
            raise InternalInconsistencyError(
                f"s({L},{h}) - s_00 - s_11 = {mixed} is odd; mixed affix counts must be equal"
            )
        return mixed // 2

    def p_affix(self, L: int, h: int, letter: str) -> int:
        """p_x(L, h): balanced palindromes whose first (and last) letter is x"""
        _check_affix_domain(L, h)
        if letter == "0":
            return self.p(L - h - 1, h)
        if letter == "1":
            return self.p(h - 1, L - 1)
        raise InvalidArgumentError(f"Palindrome letter must be '0' or '1', got {letter!r}")

    def s_table(self, max_L: int) -> CountTable:
        _check_nonneg("max_L", max_L)
        return tuple(tuple(self.s(L, h) for h in range(L + 1)) for L in range(max_L + 1))

    def p_table(self, max_L: int) -> CountTable:
        _check_nonneg("max_L", max_L)
        return tuple(tuple(self.p(L, h) for h in range(L + 1)) for L in range(max_L + 1))


def _check_nonneg(name: str, value: int) -> None:
    if value < 0:
        raise InvalidArgumentError(f"{name} must be >= 0, got {value}")


def _check_affix_domain(L: int, h: int) -> None:
    if L < 1 or h < 0 or h > L:
        raise InvalidArgumentError(f"Affix counts need L >= 1 and 0 <= h <= L, got L={L}, h={h}")


def s_count(L: int, h: int, evaluator: Optional[CountingEvaluator] = None) -> int:
    return (evaluator or CountingEvaluator()).s(L, h)


def p_count(L: int, h: int, evaluator: Optional[CountingEvaluator] = None) -> int:
    return (evaluator or CountingEvaluator()).p(L, h)


def s_affix_count(L: int, h: int, first: str, last: str,
                  evaluator: Optional[CountingEvaluator] = None) -> int:
    return (evaluator or CountingEvaluator()).s_affix(L, h, first, last)


def p_affix_count(L: int, h: int, letter: str,
                  evaluator: Optional[CountingEvaluator] = None) -> int:
    return (evaluator or CountingEvaluator()).p_affix(L, h, letter)


def s_table(max_L: int) -> CountTable:
    return CountingEvaluator().s_table(max_L)


def p_table(max_L: int) -> CountTable:
    return CountingEvaluator().p_table(max_L)


def s_total(L: int) -> int:
    """s(L) = 1 + sum_{i=1..L} (L-i+1) phi(i)"""
    _check_nonneg("L", L)
    if L == 0:
        return 1
    phi = totient_sieve(L)
    return 1 + sum((L - i + 1) * phi[i] for i in range(1, L + 1))


def p_total(L: int) -> int:
    """p(L) = 1 + sum_{i=0..ceil(L/2)-1} phi(L-2i)"""
    _check_nonneg("L", L)
    if L == 0:
        return 1
    phi = totient_sieve(L)
    return 1 + sum(phi[L - 2 * i] for i in range((L + 1) // 2))


def s_L2_explicit(L: int) -> int:
    """s(L, 2) = floor(((L+1)^2 + 2) / 6)"""
    _check_nonneg("L", L)
    return ((L + 1) ** 2 + 2) // 6

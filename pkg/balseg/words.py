"""
Binary word primitives

Words are plain ``str`` values over the alphabet {'0', '1'}; the empty string
is the empty word. A word of length L and height h codes the discrete segment
from (0, 0) to (L, h).
"""
import itertools
import re
from typing import List, Optional, Tuple

from .errors import InvalidArgumentError

Word = str

_ZERO_RUN = re.compile(r"0+")
_GLYPHS = {"naive": "|", "standard": "/"}


def as_word(text: str) -> Word:
    """Validate a 0/1 string and return it as a Word"""
    if not isinstance(text, str) or any(c not in "01" for c in text):
        raise InvalidArgumentError(f"Not a binary word: {text!r}")
    return text


def height(w: Word) -> int:
    return w.count("1")


def width(w: Word) -> int:
    return w.count("0")


def reverse(w: Word) -> Word:
    return w[::-1]


def complement(w: Word) -> Word:
    return w.translate(str.maketrans("01", "10"))


def is_palindrome(w: Word) -> bool:
    return w == w[::-1]


def word_type(w: Word) -> Optional[int]:
    """0 if w avoids 11, 1 if w avoids 00, None if it contains both"""
    if "11" not in w:
        return 0
    if "00" not in w:
        return 1
    return None


def is_balanced(w: Word) -> bool:
    """
    True iff any two factors of equal length differ by at most one 1.

    For every window length the min and max number of ones over all
    factors of that length are computed with a sliding window.
    """
    bits = [1 if c == "1" else 0 for c in w]
    size = len(bits)
    for n in range(1, size + 1):
        ones = sum(bits[:n])
        low = high = ones
        for i in range(n, size):
            ones += bits[i] - bits[i - n]
            if ones < low:
                low = ones
            elif ones > high:
                high = ones
            if high - low > 1:
                return False
    return True


def phi(w: Word) -> Word:
    """Sturmian morphism 0 -> 0, 1 -> 01"""
    return w.replace("1", "01")


def theta(w: Word) -> Word:
    """0-erasing map: drop one 0 from every maximal run of 0s"""
    return _ZERO_RUN.sub(lambda m: m.group()[1:], w)


def lift_00(w: Word) -> Word:
    """Preimage of w under theta inside S_{0,0}: phi(w)0"""
    return phi(w) + "0"


def lift_01(w: Word) -> Word:
    """Preimage of w (ending with 1) under theta inside S_{0,1}"""
    return phi(w)


def lift_10(w: Word) -> Word:
    """Preimage of w (starting with 1) under theta inside S_{1,0}"""
    return phi(w)[1:] + "0"


def lift_11(w: Word) -> Word:
    """Preimage of w (starting and ending with 1) under theta inside S_{1,1}"""
    return phi(w)[1:]


def _check_length_height(L: int, h: int) -> None:
    if L < 0 or h < 0 or h > L:
        raise InvalidArgumentError(f"Require 0 <= h <= L, got L={L}, h={h}")


def _forced_symbols(L: int, prefix: Word, suffix: Word) -> Optional[List[Optional[str]]]:
    """Per-position symbol imposed by the affixes, None if they clash"""
    forced: List[Optional[str]] = [None] * L
    for i, c in enumerate(prefix):
        forced[i] = c
    offset = L - len(suffix)
    for i, c in enumerate(suffix):
        if forced[offset + i] not in (None, c):
            return None
        forced[offset + i] = c
    return forced


def enumerate_balanced(
    L: int,
    h: int,
    prefix: Word = "",
    suffix: Word = "",
    method: str = "pruned",
) -> List[Word]:
    """
    All balanced words of length L and height h with the given prefix and
    suffix, in lexicographic order (0 < 1).

    ``method="pruned"`` grows words depth first and abandons a partial word
    as soon as one of its windows breaks balance or the height can no longer
    be reached. ``method="naive"`` filters all 2^L words.
    """
    _check_length_height(L, h)
    prefix, suffix = as_word(prefix), as_word(suffix)
    if len(prefix) > L or len(suffix) > L:
        raise InvalidArgumentError(
            f"Affixes longer than L={L}: prefix={prefix!r}, suffix={suffix!r}"
        )
    if method == "naive":
        return _enumerate_naive(L, h, prefix, suffix)
    if method != "pruned":
        raise InvalidArgumentError(f"Unknown enumeration method: {method!r}")

    forced = _forced_symbols(L, prefix, suffix)
    if forced is None:
        return []

    found: List[Word] = []
    letters: List[str] = []
    # prefix sums of ones; sums[i] = ones in letters[:i]
    sums = [0]
    # one frame per placed letter: min/max ones per window length, next symbol to try
    stack: List[Tuple[List[int], List[int], int]] = [([], [], 0)]
    while stack:
        low, high, choice = stack[-1]
        m = len(letters)
        if m == L or choice == 2:
            if m == L:
                found.append("".join(letters))
            stack.pop()
            if letters:
                letters.pop()
                sums.pop()
            continue
        stack[-1] = (low, high, choice + 1)
        c = "01"[choice]
        if forced[m] not in (None, c):
            continue
        total = sums[-1] + (c == "1")
        if total > h or total + (L - m) - 1 < h:
            continue
        # windows ending at the new letter, one per length n = 1..m+1
        new_low, new_high = low[:], high[:]
        ok = True
        for n in range(1, m + 2):
            k = total - sums[m + 1 - n]
            if n > m:
                new_low.append(k)
                new_high.append(k)
                continue
            if k < new_low[n - 1]:
                new_low[n - 1] = k
            elif k > new_high[n - 1]:
                new_high[n - 1] = k
            if new_high[n - 1] - new_low[n - 1] > 1:
                ok = False
                break
        if ok:
            letters.append(c)
            sums.append(total)
            stack.append((new_low, new_high, 0))
    return found


def _enumerate_naive(L: int, h: int, prefix: Word, suffix: Word) -> List[Word]:
    words = (
        "".join(bits)
        for bits in itertools.product("01", repeat=L)
    )
    return [
        w for w in words
        if height(w) == h and w.startswith(prefix) and w.endswith(suffix) and is_balanced(w)
    ]


def enumerate_balanced_palindromes(
    L: int,
    h: int,
    first_letter: Optional[str] = None,
    method: str = "pruned",
) -> List[Word]:
    """
    Balanced palindromes of length L and height h, optionally starting (and
    ending) with first_letter, in lexicographic order.

    Only the first half is enumerated (it is a factor, hence balanced); each
    half is mirrored around every admissible middle letter and the result
    tested for balance.
    """
    _check_length_height(L, h)
    if first_letter is not None and first_letter not in ("0", "1"):
        raise InvalidArgumentError(f"first_letter must be '0' or '1', got {first_letter!r}")
    if first_letter is not None and L == 0:
        return []
    half_length, odd = divmod(L, 2)
    found: List[Word] = []
    for middle in (("0", "1") if odd else ("",)):
        rest = h - height(middle)
        if rest < 0 or rest % 2 or rest // 2 > half_length:
            continue
        if first_letter is not None and half_length == 0 and middle != first_letter:
            continue
        prefix = first_letter if first_letter is not None and half_length else ""
        for half in enumerate_balanced(half_length, rest // 2, prefix, method=method):
            w = half + middle + half[::-1]
            if is_balanced(w):
                found.append(w)
    return sorted(found)


def render_path(w: Word, mode: str = "naive") -> str:
    """
    ASCII drawing of the segment coded by w on an (L+1) x (h+1) grid.

    One column per letter: 0 draws '_', 1 draws '|' (naive) or '/'
    (standard) and moves one row up. The end point (L, h) is marked '*'.
    Rows are printed top first, so the origin is bottom-left.
    """
    if mode not in _GLYPHS:
        raise InvalidArgumentError(f"Unknown render mode: {mode!r}")
    w = as_word(w)
    if not w:
        return ""
    rise = _GLYPHS[mode]
    rows = [["."] * (len(w) + 1) for _ in range(height(w) + 1)]
    y = 0
    for x, c in enumerate(w):
        rows[y][x] = "_" if c == "0" else rise
        y += c == "1"
    rows[y][len(w)] = "*"
    return "\n".join("".join(row) for row in reversed(rows))

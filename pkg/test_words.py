"""
Tests for binary word primitives: balance, phi/theta, enumeration, rendering
"""
import pytest
from hypothesis import given, strategies as st

from balseg.errors import InvalidArgumentError
from balseg.words import (
    as_word, complement, enumerate_balanced, enumerate_balanced_palindromes, height,
    is_balanced, is_palindrome, lift_00, lift_01, lift_10, lift_11, phi, render_path,
    reverse, theta, width, word_type,
)

binary_words = st.text(alphabet="01", max_size=24)

FIG_1_WORDS = ["00101", "01001", "01010", "10001", "10010", "10100"]


def test_letter_counts():
    assert height("01101") == 3
    assert width("01101") == 2
    assert height("") == 0


def test_as_word_rejects_other_symbols():
    assert as_word("0110") == "0110"
    with pytest.raises(InvalidArgumentError):
        as_word("0120")


@pytest.mark.parametrize("word, expected", [
    ("", True),
    ("0", True),
    ("0101", True),
    ("1001", True),
    ("0110", True),
    ("0011", False),
    ("00011", False),
    ("010011", False),
])
def test_is_balanced(word, expected):
    assert is_balanced(word) is expected


def test_word_type():
    assert word_type("0100") == 0
    assert word_type("1101") == 1
    assert word_type("0011") is None
    assert word_type("") == 0


def test_phi_and_theta():
    assert phi("101") == "01001"
    assert theta("0100100") == "1010"
    assert theta("1001001") == "10101"
    assert theta("000") == "00"
    assert theta("") == ""
    assert theta("111") == "111"


def test_lifts_invert_theta():
    assert lift_00("01") == "0010"
    assert theta(lift_00("01")) == "01"
    assert lift_01("101") == "01001"
    assert lift_10("101") == "10010"
    assert lift_11("101") == "1001"
    for lift, w in ((lift_01, "0101"), (lift_10, "1010"), (lift_11, "101")):
        assert theta(lift(w)) == w


def test_enumerate_fig_1():
    assert enumerate_balanced(5, 2) == FIG_1_WORDS


def test_enumerate_palindromes_fig_2():
    assert enumerate_balanced_palindromes(5, 2) == ["01010", "10001"]


def test_enumerate_trivial_rows():
    assert enumerate_balanced(3, 0) == ["000"]
    assert enumerate_balanced(3, 3) == ["111"]
    assert enumerate_balanced(0, 0) == [""]
    assert enumerate_balanced_palindromes(0, 0) == [""]
    assert enumerate_balanced_palindromes(0, 0, "1") == []


def test_enumerate_with_affixes():
    assert enumerate_balanced(5, 2, "0", "1") == ["00101", "01001"]
    assert enumerate_balanced(5, 2, "1", "0") == ["10010", "10100"]
    assert enumerate_balanced(5, 2, "00", "00") == []
    assert enumerate_balanced_palindromes(5, 2, "1") == ["10001"]


@pytest.mark.parametrize("L", range(13))
def test_pruned_matches_naive(L):
    for h in range(L + 1):
        assert enumerate_balanced(L, h) == enumerate_balanced(L, h, method="naive")


@pytest.mark.parametrize("L", range(15))
def test_palindromes_match_filtered_enumeration(L):
    for h in range(L + 1):
        expected = [w for w in enumerate_balanced(L, h) if is_palindrome(w)]
        assert enumerate_balanced_palindromes(L, h) == expected
        for a in "01":
            assert enumerate_balanced_palindromes(L, h, a) == [w for w in expected if w.startswith(a)]


def test_long_words_do_not_recurse():
    assert enumerate_balanced(1200, 0) == ["0" * 1200]
    assert enumerate_balanced(1200, 1200) == ["1" * 1200]
    assert enumerate_balanced_palindromes(1201, 1) == ["0" * 600 + "1" + "0" * 600]


def test_enumerate_rejects_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        enumerate_balanced(3, 4)
    with pytest.raises(InvalidArgumentError):
        enumerate_balanced(-1, 0)
    with pytest.raises(InvalidArgumentError):
        enumerate_balanced(3, 1, prefix="0000")
    with pytest.raises(InvalidArgumentError):
        enumerate_balanced(3, 1, method="smart")
    with pytest.raises(InvalidArgumentError):
        enumerate_balanced_palindromes(3, 1, "2")


def test_render_path():
    assert render_path("01", "naive") == "..*\n_|."
    assert render_path("01", "standard") == "..*\n_/."
    assert render_path("") == ""
    drawing = render_path("00101")
    assert drawing.splitlines()[0].endswith("*")
    assert len(drawing.splitlines()) == 3
    with pytest.raises(InvalidArgumentError):
        render_path("01", "diagonal")


@given(binary_words)
def test_balance_closed_under_symmetries(w):
    assert is_balanced(w) == is_balanced(reverse(w)) == is_balanced(complement(w))


@given(binary_words)
def test_phi_theta_preserve_balance(w):
    if is_balanced(w):
        assert is_balanced(phi(w))
        assert is_balanced(theta(w))


@given(binary_words)
def test_theta_preserves_palindromes(w):
    if is_palindrome(w):
        assert is_palindrome(theta(w))


@given(binary_words)
def test_theta_inverts_phi_on_words_ending_with_one(w):
    assert theta(phi(w + "1")) == w + "1"


@given(binary_words, st.integers(min_value=0, max_value=5))
def test_theta_suffix_rules(w, a):
    assert theta(w + "1") == theta(w) + "1"
    assert theta(w + "1" + "0" * (a + 1)) == theta(w) + "1" + "0" * a


@given(binary_words)
def test_theta_commutes_with_reversal(w):
    assert theta(reverse(w)) == reverse(theta(w))

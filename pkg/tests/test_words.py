"""Word predicates, censuses, and the exhaustive word-level sweeps."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _helpers import (
    all_words,
    first_long_square_bruteforce,
    has_long_palindrome_bruteforce,
)
from lrftrees import words

binary_words = st.text(alphabet="01", max_size=16)


def test_reverse_examples():
    assert words.reverse("001") == "100"
    assert words.reverse("") == ""
    assert words.reverse("0110") == "0110"


@given(binary_words)
def test_reverse_involutive(w):
    assert words.reverse(words.reverse(w)) == w


@given(binary_words)
def test_complement_involutive(w):
    assert words.complement(words.complement(w)) == w


def test_rejects_non_binary():
    for fn in (
        words.reverse,
        words.complement,
        words.contains_long_palindrome,
        words.contains_long_square,
        words.window_check,
    ):
        with pytest.raises(ValueError):
            fn("012")


def test_long_palindrome_examples():
    assert words.contains_long_palindrome("00010111") is None
    assert words.contains_long_palindrome("0110") == words.PalindromeWitness(0, 4)
    assert words.contains_long_palindrome("01110") == words.PalindromeWitness(0, 5)


def test_long_square_examples():
    assert words.contains_long_square("010010") == words.SquareWitness(0, 3)
    assert words.contains_long_square("00010111") is None
    assert words.contains_long_square("0110110") == words.SquareWitness(0, 3)


@pytest.mark.parametrize("length", range(0, 13))
def test_center_property_exhaustive(length):
    # presence via length-4/5 windows agrees with the all-factor scan, and
    # any witness has length exactly 4 or 5
    for w in all_words(length):
        hit = words.contains_long_palindrome(w)
        assert (hit is not None) == has_long_palindrome_bruteforce(w)
        if hit is not None:
            factor = w[hit.offset : hit.offset + hit.length]
            assert hit.length in (4, 5)
            assert factor == factor[::-1]


@pytest.mark.parametrize("length", range(0, 13))
def test_square_witness_canonical_exhaustive(length):
    for w in all_words(length):
        hit = words.contains_long_square(w)
        expected = first_long_square_bruteforce(w)
        got = None if hit is None else (hit.offset, hit.period)
        assert got == expected


@given(binary_words)
def test_window_check_matches_palindrome_scan(w):
    assert words.window_check(w) == (words.contains_long_palindrome(w) is None)


@given(binary_words)
def test_reversal_invariance(w):
    r = w[::-1]
    assert (words.contains_long_palindrome(w) is None) == (
        words.contains_long_palindrome(r) is None
    )
    assert (words.contains_long_square(w) is None) == (
        words.contains_long_square(r) is None
    )


@given(binary_words)
def test_complement_invariance(w):
    c = words.complement(w)
    assert (words.contains_long_palindrome(w) is None) == (
        words.contains_long_palindrome(c) is None
    )
    assert (words.contains_long_square(w) is None) == (
        words.contains_long_square(c) is None
    )


@given(binary_words, st.data())
def test_factor_monotonicity(w, data):
    if words.contains_long_square(w) is not None:
        return
    lo = data.draw(st.integers(0, len(w)))
    hi = data.draw(st.integers(lo, len(w)))
    assert words.contains_long_square(w[lo:hi]) is None


def test_length_floors():
    for length in range(6):
        for w in all_words(length):
            assert words.contains_long_square(w) is None
    for length in range(4):
        for w in all_words(length):
            assert words.contains_long_palindrome(w) is None


# ---------------------------------------------------------------- censuses


def test_lpf_census_small_counts():
    # frozen from the all-factor brute-force oracle
    assert len(words.lpf_census(3)) == 8
    assert len(words.lpf_census(4)) == 12
    assert len(words.lpf_census(5)) == 12
    assert len(words.lpf_census(6)) == 8
    assert len(words.lpf_census(7)) == 4


def test_lpf_census_boundary():
    assert words.lpf_census(8) == ["00010111", "11101000"]
    assert words.lpf_census(9) == []


def test_lpf_census_matches_oracle():
    for length in range(0, 11):
        expected = [w for w in all_words(length) if not has_long_palindrome_bruteforce(w)]
        assert words.lpf_census(length) == expected


def test_lsf_census_matches_oracle():
    for length in (0, 3, 6, 8):
        expected = [
            w for w in all_words(length) if first_long_square_bruteforce(w) is None
        ]
        assert words.lsf_census(length) == expected
    assert len(words.lsf_census(6)) == 56


def test_census_sorted_lexicographically():
    census = words.lsf_census(9)
    assert census == sorted(census)


def test_census_guard():
    with pytest.raises(ValueError, match="guard"):
        words.lpf_census(words.MAX_CENSUS_LENGTH + 1)
    with pytest.raises(ValueError):
        words.lpf_census(-1)


# ---------------------------------------------------------------- sweeps


def test_abxba_trivial_cases():
    report = words.check_lemma_abxba(0)
    assert report.words_checked == 1 and report.holds

    report = words.check_lemma_abxba(2)
    assert report.words_checked == 7 and report.holds


def test_abxba_matches_bruteforce():
    report = words.check_lemma_abxba(10)
    assert report.words_checked == 2047
    assert report.holds
    for length in range(4):
        for x in all_words(length):
            assert has_long_palindrome_bruteforce("01" + x + "10")


def test_abxba_threads_deterministic():
    assert words.check_lemma_abxba(12, threads=4) == words.check_lemma_abxba(12)


def test_abxba_rejects_negative():
    with pytest.raises(ValueError):
        words.check_lemma_abxba(-1)


def test_palindrome9_report():
    report = words.check_lemma_palindrome9()
    assert report.holds
    assert report.boundary_ok
    assert report.length9_free == ()
    assert report.length8_free == ("00010111", "11101000")


def test_interior_triple_condition_is_redundant():
    # at length 9 the two palindrome window conditions already exclude
    # everything, so the triple condition excludes nothing further
    survivors9 = [w for w in all_words(9) if words.window_check(w)]
    assert survivors9 == []
    # at the length-8 boundary the surviving words also satisfy it
    for w in words.lpf_census(8):
        assert words.window_check(w)
        assert words.interior_triple_free(w)


@settings(max_examples=30)
@given(st.text(alphabet="01", min_size=9, max_size=9))
def test_interior_triple_free_spot(w):
    expected = not any(w[i] == w[i + 1] == w[i + 2] for i in range(1, 6))
    assert words.interior_triple_free(w) == expected

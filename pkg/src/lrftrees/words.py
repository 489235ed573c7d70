"""Binary words and their repetition structure.

A word is a plain ``str`` over the letters ``'0'``/``'1'``; the empty
string is the empty word. A *long square* is a factor uu with ``|u| >= 3``
(squares of period 1 or 2 are allowed); a *long palindrome* is a
palindromic factor of length at least 4.

Single-word predicates scan directly. Exhaustive sweeps over all words of
a given length run on the bit-packed kernels in :mod:`lrftrees._kernels`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels

#: censuses enumerate 2**length words; refuse anything larger
MAX_CENSUS_LENGTH = 24

_COMPLEMENT = str.maketrans("01", "10")


@dataclass(frozen=True)
class PalindromeWitness:
    """A palindromic factor: ``word[offset : offset + length]``."""

    offset: int
    length: int


@dataclass(frozen=True)
class SquareWitness:
    """A square factor: ``word[offset : offset + period]`` occurring twice in a row."""

    offset: int
    period: int


def _require_binary(word: str) -> None:
    if not set(word) <= {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")


def reverse(word: str) -> str:
    """Letter-reversed word; involutive."""
    _require_binary(word)
    return word[::-1]


def complement(word: str) -> str:
    """Letter-wise binary complement."""
    _require_binary(word)
    return word.translate(_COMPLEMENT)


def find_long_palindrome(letters) -> PalindromeWitness | None:
    """First long palindrome in any letter sequence, or None.

    Scans windows of length 4 then 5 at each offset. Every palindrome of
    length >= 4 contains such a window as a central factor, so presence is
    equivalent to an all-factor scan; the returned witness is the smallest
    (offset, length) among length-4/5 palindromic factors.
    """
    n = len(letters)
    for o in range(n - 3):
        if letters[o] == letters[o + 3] and letters[o + 1] == letters[o + 2]:
            return PalindromeWitness(o, 4)
        if o + 5 <= n and letters[o] == letters[o + 4] and letters[o + 1] == letters[o + 3]:
            return PalindromeWitness(o, 5)
    return None


def find_long_square(letters) -> SquareWitness | None:
    """First long square in any letter sequence, smallest offset then period."""
    n = len(letters)
    for o in range(n - 5):
        for p in range(3, (n - o) // 2 + 1):
            if letters[o : o + p] == letters[o + p : o + 2 * p]:
                return SquareWitness(o, p)
    return None


def contains_long_palindrome(word: str) -> PalindromeWitness | None:
    _require_binary(word)
    return find_long_palindrome(word)


def contains_long_square(word: str) -> SquareWitness | None:
    _require_binary(word)
    return find_long_square(word)


def window_check(word: str) -> bool:
    """True when no length-4 and no length-5 palindromic window exists.

    Formulated as the complement conditions (equal letters three apart
    force the inner pair to differ; equal letters four apart force the
    flanking pair to differ); agrees with contains_long_palindrome being
    absent.
    """
    _require_binary(word)
    n = len(word)
    for i in range(n - 3):
        if word[i] == word[i + 3] and word[i + 1] == word[i + 2]:
            return False
    for i in range(n - 4):
        if word[i] == word[i + 4] and word[i + 1] == word[i + 3]:
            return False
    return True


def interior_triple_free(word: str) -> bool:
    """No run of three equal letters that avoids both word boundaries.

    This is the third window condition of the length-9 case analysis; the
    exhaustive sweeps show it excludes nothing beyond the two palindrome
    window conditions.
    """
    _require_binary(word)
    return not any(
        word[i] == word[i + 1] == word[i + 2] for i in range(1, len(word) - 3)
    )


def _render(packed: int, length: int) -> str:
    return format(int(packed), "b").zfill(length) if length else ""


def _census(length: int, mask_fn) -> list[str]:
    if length < 0:
        raise ValueError("length must be non-negative")
    if length > MAX_CENSUS_LENGTH:
        raise ValueError(
            f"census length {length} exceeds guard {MAX_CENSUS_LENGTH} "
            f"(2**{length} words)"
        )
    mask = mask_fn(length)
    return [_render(w, length) for w in np.nonzero(mask)[0]]


def lpf_census(length: int) -> list[str]:
    """All long-palindrome-free words of ``length``, lexicographically sorted."""
    return _census(length, _kernels.palindrome_free_mask)


def lsf_census(length: int) -> list[str]:
    """All long-square-free words of ``length``, lexicographically sorted."""
    return _census(length, _kernels.square_free_mask)


@dataclass(frozen=True)
class SweepReport:
    """Outcome of an exhaustive word sweep."""

    words_checked: int
    counterexamples: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def check_lemma_abxba(max_x_len: int, threads: int = 1) -> SweepReport:
    """Check that every word 01.x.10 with ``|x| <= max_x_len`` contains a long palindrome.

    Sweeps all 2**(max_x_len+1) - 1 choices of x exhaustively and reports
    any word that fails (none is expected).
    """
    if max_x_len < 0:
        raise ValueError("max_x_len must be non-negative")
    lengths = range(max_x_len + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_len = list(pool.map(_kernels.abxba_counterexamples, lengths))
    else:
        per_len = [_kernels.abxba_counterexamples(length) for length in lengths]
    bad = [
        "01" + _render(x, length) + "10"
        for length, xs in zip(lengths, per_len)
        for x in xs
    ]
    total = (1 << (max_x_len + 1)) - 1
    return SweepReport(words_checked=total, counterexamples=tuple(bad))


@dataclass(frozen=True)
class Palindrome9Report:
    """Length-9 exhaustion plus the length-8 boundary census."""

    length9_free: tuple[str, ...]
    length8_free: tuple[str, ...]

    @property
    def holds(self) -> bool:
        """Every length-9 binary word contains a long palindrome."""
        return not self.length9_free

    @property
    def boundary_ok(self) -> bool:
        """The bound is tight: length-8 words without long palindromes exist."""
        return "00010111" in self.length8_free


def check_lemma_palindrome9() -> Palindrome9Report:
    """Exhaustively confirm that no length-9 binary word avoids long palindromes."""
    return Palindrome9Report(
        length9_free=tuple(lpf_census(9)),
        length8_free=tuple(lpf_census(8)),
    )

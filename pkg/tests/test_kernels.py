"""The jit and numpy kernel paths must agree with each other and with the
single-word scanners."""

import numpy as np
import pytest

from lrftrees import _backend, _kernels, words
from lrftrees.search import brute_force_census
from lrftrees.trees import build_from_parent_list

BACKENDS = ["numpy"] + (["numba"] if _backend.HAVE_NUMBA else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    monkeypatch.setenv(_backend.ENV_VAR, request.param)
    return request.param


def test_env_selection(monkeypatch):
    monkeypatch.setenv(_backend.ENV_VAR, "numpy")
    assert _backend.backend() == "numpy"
    monkeypatch.setenv(_backend.ENV_VAR, "nonsense")
    with pytest.raises(ValueError):
        _backend.backend()
    monkeypatch.delenv(_backend.ENV_VAR)
    assert _backend.backend() in ("numba", "numpy")


@pytest.mark.parametrize("length", [0, 3, 4, 7, 10])
def test_palindrome_mask_matches_scanner(backend, length):
    mask = _kernels.palindrome_free_mask(length)
    assert mask.shape == (1 << length,)
    for packed in range(1 << length):
        w = format(packed, "b").zfill(length) if length else ""
        assert mask[packed] == (words.contains_long_palindrome(w) is None)


@pytest.mark.parametrize("length", [0, 5, 6, 9, 12])
def test_square_mask_matches_scanner(backend, length):
    mask = _kernels.square_free_mask(length)
    for packed in range(1 << length):
        w = format(packed, "b").zfill(length) if length else ""
        assert mask[packed] == (words.contains_long_square(w) is None)


@pytest.mark.skipif(not _backend.HAVE_NUMBA, reason="numba unavailable")
@pytest.mark.parametrize("length", [8, 13, 16])
def test_backends_agree_on_masks(monkeypatch, length):
    monkeypatch.setenv(_backend.ENV_VAR, "numba")
    pal_jit = _kernels.palindrome_free_mask(length)
    sq_jit = _kernels.square_free_mask(length)
    monkeypatch.setenv(_backend.ENV_VAR, "numpy")
    assert np.array_equal(pal_jit, _kernels.palindrome_free_mask(length))
    assert np.array_equal(sq_jit, _kernels.square_free_mask(length))


def test_mask_subranges(backend):
    full = _kernels.palindrome_free_mask(9)
    part = _kernels.palindrome_free_mask(9, 100, 300)
    assert np.array_equal(part, full[100:300])


def test_abxba_kernel_empty(backend):
    for x_len in range(0, 9):
        assert _kernels.abxba_counterexamples(x_len).size == 0


def test_base_square_table_binary_matches_mask(backend):
    for length in (6, 9, 11):
        table = _kernels.base_square_table(length, 2)
        mask = _kernels.square_free_mask(length)
        assert np.array_equal(table, ~mask)


def test_base_square_table_ternary(backend):
    length, k = 7, 3
    table = _kernels.base_square_table(length, k)
    for packed in range(k**length):
        digits = []
        rest = packed
        for _ in range(length):
            digits.append(rest % k)
            rest //= k
        letters = tuple(reversed(digits))
        from _helpers import first_long_square_bruteforce

        assert table[packed] == (first_long_square_bruteforce(letters) is not None)


def test_census_backends_agree(monkeypatch):
    tree = build_from_parent_list([None, 0, 1, 2, 3, 4, 5, 2, 7])
    monkeypatch.setenv(_backend.ENV_VAR, "numpy")
    count_np = brute_force_census(tree, 2)
    if _backend.HAVE_NUMBA:
        monkeypatch.setenv(_backend.ENV_VAR, "numba")
        assert brute_force_census(tree, 2) == count_np

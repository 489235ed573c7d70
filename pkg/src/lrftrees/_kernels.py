"""Hot sweep kernels: numba-jitted loops with vectorised numpy fallbacks.

Binary words of length n are packed MSB-first: the letter at position i
sits at bit (n-1-i), so ascending packed value equals ascending
lexicographic order of the rendered words. Base-k words use the analogous
big-endian digit packing.

Every public function dispatches on :func:`lrftrees._backend.backend`.
The jit path streams word-by-word with early exit; the numpy path runs
the same window tests as whole-array bit operations, chunked to bound
memory.
"""

from __future__ import annotations

import numpy as np

from ._backend import HAVE_NUMBA, backend

_CHUNK = 1 << 20
_ABXBA_CAP = 1024


# --------------------------------------------------------------------------
# loop bodies (compiled with numba when available)
# --------------------------------------------------------------------------


def _palindrome_free_loop(n, lo, hi, out):
    # no palindromic window of length 4 or 5 anywhere in the word
    for w in range(lo, hi):
        ok = True
        for o in range(n - 3):
            top = n - 1 - o
            if (((w >> top) ^ (w >> (top - 3))) & 1) == 0 and (
                ((w >> (top - 1)) ^ (w >> (top - 2))) & 1
            ) == 0:
                ok = False
                break
            if top >= 4:
                if (((w >> top) ^ (w >> (top - 4))) & 1) == 0 and (
                    ((w >> (top - 1)) ^ (w >> (top - 3))) & 1
                ) == 0:
                    ok = False
                    break
        out[w - lo] = ok


def _square_free_loop(n, lo, hi, out):
    # no factor uu with |u| >= 3
    for w in range(lo, hi):
        ok = True
        for p in range(3, n // 2 + 1):
            mask = (1 << p) - 1
            for o in range(n - 2 * p + 1):
                if (((w >> (n - o - p)) ^ (w >> (n - o - 2 * p))) & mask) == 0:
                    ok = False
                    break
            if not ok:
                break
        out[w - lo] = ok


def _abxba_loop(x_len, bad):
    # words 01.x.10; returns how many lack a long palindrome (expected 0)
    n = x_len + 4
    head = (1 << (x_len + 2)) | 2
    count = 0
    for x in range(1 << x_len):
        w = head | (x << 2)
        free = True
        for o in range(n - 3):
            top = n - 1 - o
            if (((w >> top) ^ (w >> (top - 3))) & 1) == 0 and (
                ((w >> (top - 1)) ^ (w >> (top - 2))) & 1
            ) == 0:
                free = False
                break
            if top >= 4:
                if (((w >> top) ^ (w >> (top - 4))) & 1) == 0 and (
                    ((w >> (top - 1)) ^ (w >> (top - 3))) & 1
                ) == 0:
                    free = False
                    break
        if free:
            if count < bad.shape[0]:
                bad[count] = x
            count += 1
    return count


def _base_square_table_loop(length, k, digits, out):
    # out[w] = True when the base-k word packed as w contains a long square;
    # digits is scratch holding the current word (big-endian), advanced like
    # an odometer so each step costs O(1) amortised
    for i in range(length):
        digits[i] = 0
    for w in range(out.shape[0]):
        found = False
        for p in range(3, length // 2 + 1):
            for o in range(length - 2 * p + 1):
                eq = True
                for t in range(p):
                    if digits[o + t] != digits[o + p + t]:
                        eq = False
                        break
                if eq:
                    found = True
                    break
            if found:
                break
        out[w] = found
        i = length - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < k:
                break
            digits[i] = 0
            i -= 1


def _census_loop(num, k, paths, plens, vpow, table_data, table_off):
    # count colorings whose every listed path avoids long squares
    count = 0
    for idx in range(num):
        good = True
        for pi in range(plens.shape[0]):
            key = 0
            for t in range(plens[pi]):
                key = key * k + (idx // vpow[paths[pi, t]]) % k
            if table_data[table_off[pi] + key]:
                good = False
                break
        if good:
            count += 1
    return count


if HAVE_NUMBA:
    from numba import njit

    _palindrome_free_jit = njit(cache=True, nogil=True)(_palindrome_free_loop)
    _square_free_jit = njit(cache=True, nogil=True)(_square_free_loop)
    _abxba_jit = njit(cache=True, nogil=True)(_abxba_loop)
    _base_square_table_jit = njit(cache=True, nogil=True)(_base_square_table_loop)
    _census_jit = njit(cache=True, nogil=True)(_census_loop)


# --------------------------------------------------------------------------
# numpy fallbacks
# --------------------------------------------------------------------------


def _palindrome_bad_chunk(n, w):
    bad = np.zeros(w.shape[0], dtype=np.bool_)
    for o in range(n - 3):
        top = n - 1 - o
        bad |= ((((w >> top) ^ (w >> (top - 3))) & 1) == 0) & (
            (((w >> (top - 1)) ^ (w >> (top - 2))) & 1) == 0
        )
        if top >= 4:
            bad |= ((((w >> top) ^ (w >> (top - 4))) & 1) == 0) & (
                (((w >> (top - 1)) ^ (w >> (top - 3))) & 1) == 0
            )
    return bad


def _palindrome_free_numpy(n, lo, hi, out):
    for s in range(lo, hi, _CHUNK):
        e = min(s + _CHUNK, hi)
        w = np.arange(s, e, dtype=np.int64)
        out[s - lo : e - lo] = ~_palindrome_bad_chunk(n, w)


def _square_free_numpy(n, lo, hi, out):
    for s in range(lo, hi, _CHUNK):
        e = min(s + _CHUNK, hi)
        w = np.arange(s, e, dtype=np.int64)
        bad = np.zeros(e - s, dtype=np.bool_)
        for p in range(3, n // 2 + 1):
            mask = (1 << p) - 1
            for o in range(n - 2 * p + 1):
                bad |= (((w >> (n - o - p)) ^ (w >> (n - o - 2 * p))) & mask) == 0
        out[s - lo : e - lo] = ~bad


def _abxba_numpy(x_len):
    n = x_len + 4
    head = (1 << (x_len + 2)) | 2
    hits = []
    for s in range(0, 1 << x_len, _CHUNK):
        e = min(s + _CHUNK, 1 << x_len)
        x = np.arange(s, e, dtype=np.int64)
        w = head | (x << 2)
        free = ~_palindrome_bad_chunk(n, w)
        if free.any():
            hits.append(x[free])
    if hits:
        return np.concatenate(hits)
    return np.empty(0, dtype=np.int64)


def _base_square_table_numpy(length, k, powers, out):
    w = np.arange(out.shape[0], dtype=np.int64)
    digits = [
        ((w // int(powers[length - 1 - i])) % k).astype(np.int8) for i in range(length)
    ]
    for p in range(3, length // 2 + 1):
        for o in range(length - 2 * p + 1):
            eq = np.ones(out.shape[0], dtype=np.bool_)
            for t in range(p):
                eq &= digits[o + t] == digits[o + p + t]
            out |= eq


def _census_numpy(num, k, paths, plens, vpow, table_data, table_off):
    idx = np.arange(num, dtype=np.int64)
    good = np.ones(num, dtype=np.bool_)
    for pi in range(plens.shape[0]):
        key = np.zeros(num, dtype=np.int64)
        for t in range(int(plens[pi])):
            key = key * k + (idx // int(vpow[paths[pi, t]])) % k
        good &= ~table_data[table_off[pi] + key]
    return int(good.sum())


# --------------------------------------------------------------------------
# public dispatchers
# --------------------------------------------------------------------------


def palindrome_free_mask(length, start=0, stop=None):
    """Boolean mask over packed words of ``length``: True = no long palindrome.

    ``start``/``stop`` select a packed-value subrange (used by threaded
    sweeps); the default covers all ``2**length`` words.
    """
    if stop is None:
        stop = 1 << length
    out = np.empty(stop - start, dtype=np.bool_)
    if backend() == "numba":
        _palindrome_free_jit(length, start, stop, out)
    else:
        _palindrome_free_numpy(length, start, stop, out)
    return out


def square_free_mask(length, start=0, stop=None):
    """Boolean mask over packed words of ``length``: True = no long square."""
    if stop is None:
        stop = 1 << length
    out = np.empty(stop - start, dtype=np.bool_)
    if backend() == "numba":
        _square_free_jit(length, start, stop, out)
    else:
        _square_free_numpy(length, start, stop, out)
    return out


def abxba_counterexamples(x_len):
    """Packed x values for which 01.x.10 has no long palindrome (expected none)."""
    if backend() == "numba":
        bad = np.empty(_ABXBA_CAP, dtype=np.int64)
        count = _abxba_jit(x_len, bad)
        if count > _ABXBA_CAP:  # pragma: no cover - the sweep never finds any
            raise RuntimeError(f"counterexample buffer overflow: {count} hits")
        return bad[:count].copy()
    return _abxba_numpy(x_len)


def base_square_table(length, k):
    """Boolean table over base-k words of ``length``: True = contains a long square."""
    size = k**length
    out = np.zeros(size, dtype=np.bool_)
    if length < 6:
        return out
    if backend() == "numba":
        _base_square_table_jit(length, k, np.empty(length, dtype=np.int64), out)
    else:
        powers = np.array([k**t for t in range(length)], dtype=np.int64)
        _base_square_table_numpy(length, k, powers, out)
    return out


def count_valid_colorings(num, k, paths, plens, vertex_powers, table_data, table_off):
    """Count base-k colorings (packed 0..num-1) whose listed paths all avoid long squares."""
    if plens.shape[0] == 0:
        return num
    if backend() == "numba":
        return int(
            _census_jit(num, k, paths, plens, vertex_powers, table_data, table_off)
        )
    return _census_numpy(num, k, paths, plens, vertex_powers, table_data, table_off)

"""Colorings, LRF verification with certificates, and the finite reduction."""

import numpy as np
import pytest

from _helpers import (
    canonical_violation_bruteforce,
    chain,
    lrf_bruteforce,
    random_coloring,
    random_tree,
)
from lrftrees import coloring as col
from lrftrees.coloring import (
    Coloring,
    LrfCertificate,
    generation_coloring,
    path_letters,
    path_word,
    prop2_reduction,
    recheck_certificate,
    verify_lrf,
    verify_lrf_all_pairs,
    verify_lrf_sampled,
)
from lrftrees.trees import build_from_parent_list, reroot, center_and_radius


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring(1, (0,))
    with pytest.raises(ValueError):
        Coloring(2, (0, 2))
    assert Coloring(3, (0, 1, 2)).n == 3


def test_generation_coloring_examples():
    star = build_from_parent_list([None, 0, 0, 0])
    assert generation_coloring(star, "01").colors == (0, 1, 1, 1)

    c8 = chain(8)
    word = path_word(c8, generation_coloring(c8, "00010111"), 0, 7)
    assert word == "00010111"

    with pytest.raises(ValueError, match="need 2 letters"):
        generation_coloring(star, "0")
    with pytest.raises(ValueError, match="not a binary word"):
        generation_coloring(star, "02")


def test_path_word_examples():
    star = build_from_parent_list([None, 0, 0, 0])
    c = Coloring(2, (0, 1, 1, 1))
    assert path_word(star, c, 1, 2) == "101"
    assert path_word(star, c, 2, 2) == "1"
    assert path_word(star, c, 1, 2) == path_word(star, c, 2, 1)[::-1]


def test_path_word_rejects_wide_alphabet():
    star = build_from_parent_list([None, 0, 0, 0])
    with pytest.raises(ValueError, match="binary"):
        path_word(star, Coloring(3, (0, 1, 2, 0)), 1, 2)
    # letter tuples are still available for any k
    assert path_letters(star, Coloring(3, (0, 1, 2, 0)), 1, 2) == (1, 0, 2)


def test_path_word_is_compositional():
    rng = np.random.default_rng(11)
    t = random_tree(rng, 40)
    c = random_coloring(rng, 40)
    from lrftrees import path_between

    for _ in range(30):
        u, v = int(rng.integers(40)), int(rng.integers(40))
        expected = "".join(str(c.colors[x]) for x in path_between(t, u, v))
        assert path_word(t, c, u, v) == expected


def test_coloring_size_mismatch():
    star = build_from_parent_list([None, 0, 0, 0])
    with pytest.raises(ValueError, match="covers 2 vertices"):
        verify_lrf(star, Coloring(2, (0, 1)))


# ---------------------------------------------------------------- verify


def test_star_always_valid():
    star = build_from_parent_list([None, 0, 0, 0])
    for packed in range(16):
        colors = tuple((packed >> i) & 1 for i in range(4))
        assert verify_lrf(star, Coloring(2, colors)).is_valid


def test_chain_violation_certificate():
    c6 = chain(6)
    cert = verify_lrf(c6, Coloring(2, (0, 1, 0, 0, 1, 0)))
    assert cert.verdict == col.VIOLATION
    assert cert.path == (0, 1, 2, 3, 4, 5)
    assert cert.word == "010010" and (cert.offset, cert.period) == (0, 3)
    assert recheck_certificate(c6, Coloring(2, (0, 1, 0, 0, 1, 0)), cert)


def test_single_vertex_valid():
    t = build_from_parent_list([None])
    assert verify_lrf(t, Coloring(2, (0,))).is_valid


def test_verify_handles_k3_paths():
    c6 = chain(6)
    cert = verify_lrf(c6, Coloring(3, (0, 1, 2, 0, 1, 2)))
    assert cert.verdict == col.VIOLATION
    assert cert.word == "012012"


def test_recheck_rejects_tampered_certificates():
    c6 = chain(6)
    c = Coloring(2, (0, 1, 0, 0, 1, 0))
    good = verify_lrf(c6, c)
    assert recheck_certificate(c6, c, good)
    bad_word = LrfCertificate(col.VIOLATION, good.path, "010011", 0, 3)
    assert not recheck_certificate(c6, c, bad_word)
    bad_square = LrfCertificate(col.VIOLATION, good.path, good.word, 1, 3)
    assert not recheck_certificate(c6, c, bad_square)
    not_a_path = LrfCertificate(col.VIOLATION, (0, 2, 4), "000", 0, 3)
    assert not recheck_certificate(c6, c, not_a_path)
    assert not recheck_certificate(c6, c, LrfCertificate(col.VALID))


def test_oracle_equivalence_random_sweep():
    rng = np.random.default_rng(12)
    for _ in range(200):
        n = int(rng.integers(2, 50))
        t = random_tree(rng, n)
        c = random_coloring(rng, n)
        fast = verify_lrf(t, c)
        naive = verify_lrf_all_pairs(t, c)
        assert fast.is_valid == naive.is_valid == lrf_bruteforce(t, c)
        if not fast.is_valid:
            assert recheck_certificate(t, c, fast)
            assert recheck_certificate(t, c, naive)


def test_certificate_is_canonical():
    rng = np.random.default_rng(13)
    seen_violation = False
    for _ in range(120):
        n = int(rng.integers(6, 40))
        t = random_tree(rng, n)
        c = random_coloring(rng, n)
        cert = verify_lrf(t, c)
        expected = canonical_violation_bruteforce(t, c)
        if expected is None:
            assert cert.is_valid
            continue
        seen_violation = True
        path, letters, (offset, period) = expected
        assert cert.path == tuple(path)
        assert (cert.offset, cert.period) == (offset, period)
    assert seen_violation


def test_color_swap_invariance():
    rng = np.random.default_rng(14)
    for _ in range(60):
        n = int(rng.integers(2, 40))
        t = random_tree(rng, n)
        c = random_coloring(rng, n)
        swapped = Coloring(2, tuple(1 - x for x in c.colors))
        assert verify_lrf(t, c).is_valid == verify_lrf(t, swapped).is_valid


def test_sampled_mode():
    c6 = chain(6)
    bad = Coloring(2, (0, 1, 0, 0, 1, 0))
    cert = verify_lrf_sampled(c6, bad, samples=50, seed=0)
    assert cert.verdict == col.VIOLATION
    assert recheck_certificate(c6, bad, cert)
    # sampling is deterministic for a fixed seed
    again = verify_lrf_sampled(c6, bad, samples=50, seed=0)
    assert cert == again
    good = generation_coloring(c6, "00010111"[:6] + "00")
    assert verify_lrf_sampled(c6, Coloring(2, good.colors), 10).is_valid


# ---------------------------------------------------------------- reduction


def test_reduction_valid_for_the_height7_word():
    report = prop2_reduction("00010111", 7)
    assert report.is_valid
    assert report.turn_words_checked == 140
    assert report.witness is None


def test_reduction_rejects_constant_word():
    report = prop2_reduction("00000000", 7)
    assert report.verdict == col.VIOLATION
    assert "000000" in report.witness.word


def test_reduction_rejects_alternating_word():
    report = prop2_reduction("01010101", 7)
    assert report.verdict == col.VIOLATION
    assert report.witness.period == 4


def test_reduction_length_mismatch():
    with pytest.raises(ValueError, match="does not match height"):
        prop2_reduction("0001", 7)


def test_reduction_soundness_on_random_trees():
    # VALID reduction means every generation-colored tree of that height passes
    rng = np.random.default_rng(15)
    assert prop2_reduction("00010111", 7).is_valid
    for _ in range(60):
        n = int(rng.integers(2, 300))
        t = random_tree(rng, n, max_depth=7)
        c = generation_coloring(t, "00010111")
        assert verify_lrf(t, c).is_valid


def _broom(turn_depth, climb_depth, descend_depth):
    """Spine to the turn vertex, then two branches down to the stated depths."""
    parents = [None] + list(range(turn_depth))  # spine 0..turn_depth
    for branch_depth in (climb_depth, descend_depth):
        tip = turn_depth
        for _ in range(turn_depth + 1, branch_depth + 1):
            parents.append(tip)
            tip = len(parents) - 1
    return build_from_parent_list(parents)


def test_reduction_completeness_realizes_witnesses():
    rng = np.random.default_rng(16)
    realized = 0
    for _ in range(200):
        word = "".join(str(int(b)) for b in rng.integers(0, 2, size=8))
        report = prop2_reduction(word, 7)
        if report.is_valid:
            continue
        w = report.witness
        if w.turn is None:
            t = chain(8)
        else:
            k, i, j = w.turn
            t = _broom(k, i, j)
        cert = verify_lrf(t, generation_coloring(t, word))
        assert cert.verdict == col.VIOLATION
        assert recheck_certificate(t, generation_coloring(t, word), cert)
        realized += 1
    assert realized > 50


# ---------------------------------------------------------------- format


def test_coloring_roundtrip():
    c = Coloring(3, (0, 1, 2, 1))
    assert col.parse_coloring(col.format_coloring(c)) == c


def test_coloring_format_exact_bytes():
    c = Coloring(2, (0, 1))
    assert col.format_coloring(c) == "coloring 2 2\n0 0\n1 1\n"


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("bogus\n", "expected 'coloring <n> <k>'"),
        ("coloring 2 2\n0 0\n", "expected 2 color lines"),
        ("coloring 2 2\n0 0\n0 1\n", "duplicate vertex id"),
        ("coloring 2 2\n0 0\n5 1\n", "out of range"),
        ("coloring 2 2\n0 0\n1 4\n", "color 4 out of range"),
    ],
)
def test_coloring_parse_diagnostics(text, fragment):
    with pytest.raises(ValueError, match=fragment):
        col.parse_coloring(text)


def test_certificate_formatting():
    valid = col.format_certificate(LrfCertificate(col.VALID))
    assert valid == "verdict: VALID\n"
    cert = LrfCertificate(col.VIOLATION, (3, 1, 0), "010", 0, 3)
    text = col.format_certificate(cert)
    assert "path: 3 1 0" in text and "period: 3" in text

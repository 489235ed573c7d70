"""Vertex colorings of rooted trees and long-repetition-free verification.

A coloring is total: ``colors[v]`` in 0..k-1 for every vertex. A coloring
is long-repetition-free (LRF) when the color word of every path in the
tree is long-square-free. Verification enumerates maximal paths (between
degree-1 vertices of the underlying undirected tree): every path extends
to a maximal one and long-square-freeness is inherited by factors, so
this is exact. A naive all-pairs variant doubles as a cross-check oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .trees import RootedTree, path_between
from .words import SquareWitness, find_long_square

VALID = "VALID"
VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class Coloring:
    """A total coloring with colors 0..k-1."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("at least 2 colors required")
        if any(not 0 <= c < self.k for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.k - 1}")

    @property
    def n(self) -> int:
        return len(self.colors)


def _check_pair(tree: RootedTree, coloring: Coloring) -> None:
    if coloring.n != tree.n:
        raise ValueError(
            f"coloring covers {coloring.n} vertices but tree has {tree.n}"
        )


def generation_coloring(tree: RootedTree, word: str) -> Coloring:
    """Color every depth-i vertex with letter i of ``word`` (letter 0 at the root)."""
    if not set(word) <= {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")
    if len(word) < tree.height + 1:
        raise ValueError(
            f"word of length {len(word)} cannot color a tree of height "
            f"{tree.height}: need {tree.height + 1} letters"
        )
    return Coloring(2, tuple(int(word[d]) for d in tree.depths))


def path_letters(tree: RootedTree, coloring: Coloring, u: int, v: int) -> tuple[int, ...]:
    """Color sequence along the path from u to v (any k)."""
    _check_pair(tree, coloring)
    return tuple(coloring.colors[x] for x in path_between(tree, u, v))


def path_word(tree: RootedTree, coloring: Coloring, u: int, v: int) -> str:
    """Color word along the path from u to v; binary colorings only."""
    if coloring.k != 2:
        raise ValueError("path words are binary; got a coloring with k > 2")
    return "".join(str(c) for c in path_letters(tree, coloring, u, v))


@dataclass(frozen=True)
class LrfCertificate:
    """Self-contained verification outcome.

    A VIOLATION carries the offending path, its color word and a square
    witness into that word; re-verify it with :func:`recheck_certificate`.
    """

    verdict: str
    path: tuple[int, ...] = ()
    word: str = ""
    offset: int = -1
    period: int = -1

    @property
    def is_valid(self) -> bool:
        return self.verdict == VALID


def recheck_certificate(tree: RootedTree, coloring: Coloring, cert: LrfCertificate) -> bool:
    """Independently re-verify a VIOLATION certificate against tree and coloring."""
    if cert.verdict != VIOLATION:
        return False
    if len(cert.path) < 2:
        return False
    if list(cert.path) != path_between(tree, cert.path[0], cert.path[-1]):
        return False
    word = "".join(str(coloring.colors[v]) for v in cert.path)
    if word != cert.word:
        return False
    o, p = cert.offset, cert.period
    if p < 3 or o < 0 or o + 2 * p > len(word):
        return False
    return word[o : o + p] == word[o + p : o + 2 * p]


def _letters_to_word(letters) -> str:
    return "".join(str(c) for c in letters)


def _branch_words(tree: RootedTree, colors):
    """For each vertex: the distinct downward color words to descendant
    leaves, keyed by word with the set of child branches realising it."""
    table: dict[int, dict[tuple, set[int]]] = {}
    for leaf in tree.leaves():
        word = (colors[leaf],)
        cur = leaf
        while cur != tree.root:
            par = tree.parents[cur]
            table.setdefault(par, {}).setdefault(word, set()).add(cur)
            word = (colors[par],) + word
            cur = par
    return table


def _has_violation(tree: RootedTree, coloring: Coloring) -> bool:
    """Fast verdict: scan every maximal-path color word, deduplicated at
    the top vertex of the path by (branch, downward word)."""
    colors = coloring.colors
    table = _branch_words(tree, colors)
    if len(tree.children[tree.root]) == 1:
        for word in table.get(tree.root, ()):
            if find_long_square((colors[tree.root],) + word) is not None:
                return True
    for a, per_word in table.items():
        entries = list(per_word.items())
        mid = (colors[a],)
        for i, (w1, branches1) in enumerate(entries):
            if len(branches1) >= 2:
                if find_long_square(w1[::-1] + mid + w1) is not None:
                    return True
            for w2, branches2 in entries[i + 1 :]:
                if len(branches1) == 1 and branches1 == branches2:
                    continue
                if find_long_square(w1[::-1] + mid + w2) is not None:
                    return True
    return False


def _canonical_violation(tree: RootedTree, coloring: Coloring) -> LrfCertificate:
    """Lexicographically first degree-1 endpoint pair with a long square,
    with the minimal (offset, period) witness on that path."""
    ends = tree.degree_one_vertices()
    for i, u in enumerate(ends):
        for v in ends[i + 1 :]:
            path = path_between(tree, u, v)
            letters = tuple(coloring.colors[x] for x in path)
            hit = find_long_square(letters)
            if hit is not None:
                return LrfCertificate(
                    VIOLATION,
                    path=tuple(path),
                    word=_letters_to_word(letters),
                    offset=hit.offset,
                    period=hit.period,
                )
    raise RuntimeError("violation detected by the fast pass but no maximal path shows it")


def verify_lrf(tree: RootedTree, coloring: Coloring) -> LrfCertificate:
    """Exact LRF verification via maximal paths.

    Returns VALID, or the canonical VIOLATION certificate (first endpoint
    pair in lexicographic order, then smallest offset, then smallest
    period).
    """
    _check_pair(tree, coloring)
    if tree.n == 1:
        return LrfCertificate(VALID)
    if _has_violation(tree, coloring):
        return _canonical_violation(tree, coloring)
    return LrfCertificate(VALID)


def verify_lrf_all_pairs(tree: RootedTree, coloring: Coloring) -> LrfCertificate:
    """Cross-check oracle: scan the path between every vertex pair."""
    _check_pair(tree, coloring)
    for u in range(tree.n):
        for v in range(u + 1, tree.n):
            path = path_between(tree, u, v)
            letters = tuple(coloring.colors[x] for x in path)
            hit = find_long_square(letters)
            if hit is not None:
                return LrfCertificate(
                    VIOLATION,
                    path=tuple(path),
                    word=_letters_to_word(letters),
                    offset=hit.offset,
                    period=hit.period,
                )
    return LrfCertificate(VALID)


def verify_lrf_sampled(
    tree: RootedTree, coloring: Coloring, samples: int, seed: int = 0
) -> LrfCertificate:
    """Flagged fast mode: scan only ``samples`` random degree-1 pairs.

    A VIOLATION is as good as any; a VALID verdict here is NOT a proof.
    """
    _check_pair(tree, coloring)
    ends = tree.degree_one_vertices()
    if len(ends) < 2:
        return LrfCertificate(VALID)
    rng = random.Random(seed)
    for _ in range(samples):
        u, v = rng.sample(ends, 2)
        if u > v:
            u, v = v, u
        path = path_between(tree, u, v)
        letters = tuple(coloring.colors[x] for x in path)
        hit = find_long_square(letters)
        if hit is not None:
            return LrfCertificate(
                VIOLATION,
                path=tuple(path),
                word=_letters_to_word(letters),
                offset=hit.offset,
                period=hit.period,
            )
    return LrfCertificate(VALID)


# --------------------------------------------------------------------------
# the finite reduction behind the height-7 coloring word
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionWitness:
    word: str
    offset: int
    period: int
    #: (turn depth k, climb start depth i, descend end depth j); None when the
    #: violating word is the generation word itself (a monotone path)
    turn: Optional[tuple[int, int, int]] = None


@dataclass(frozen=True)
class ReductionReport:
    verdict: str
    turn_words_checked: int
    witness: Optional[ReductionWitness] = None

    @property
    def is_valid(self) -> bool:
        return self.verdict == VALID


def prop2_reduction(word: str, height: int) -> ReductionReport:
    """Decide by finite exhaustion whether the generation coloring by
    ``word`` is LRF on *every* rooted tree of height at most ``height``.

    Any path in such a tree either descends monotonically (its color word
    is a factor of ``word`` or of its reversal) or climbs from depth i to
    a turning vertex at depth k and descends through a different child to
    depth j, giving the turn word reverse(word[k..i]) + word[k+1..j]. All
    turn words with 0 <= k < i <= height and k < j <= height are scanned,
    so a VALID verdict is sound for every realizable path shape; a
    VIOLATION is realized by an actual tree (a two-branch broom).
    """
    if not set(word) <= {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")
    if len(word) != height + 1:
        raise ValueError(
            f"word length {len(word)} does not match height {height} "
            f"(need exactly {height + 1} letters)"
        )
    checked = 0
    hit = find_long_square(word)
    if hit is not None:
        witness = ReductionWitness(word, hit.offset, hit.period, turn=None)
        return ReductionReport(VIOLATION, checked, witness)
    for k in range(height):
        for i in range(k + 1, height + 1):
            climb = word[k : i + 1][::-1]
            for j in range(k + 1, height + 1):
                checked += 1
                turn_word = climb + word[k + 1 : j + 1]
                hit = find_long_square(turn_word)
                if hit is not None:
                    witness = ReductionWitness(
                        turn_word, hit.offset, hit.period, turn=(k, i, j)
                    )
                    return ReductionReport(VIOLATION, checked, witness)
    return ReductionReport(VALID, checked)


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------


def format_coloring(coloring: Coloring) -> str:
    lines = [f"coloring {coloring.n} {coloring.k}"]
    lines.extend(f"{v} {c}" for v, c in enumerate(coloring.colors))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    """Parse the coloring text format, with line-numbered diagnostics."""
    header = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "coloring":
                raise ValueError(f"line {lineno}: expected 'coloring <n> <k>', got {raw!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ValueError(f"line {lineno}: non-integer token in {raw!r}") from None
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<vertex> <color>', got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {raw!r}") from None
    if header is None:
        raise ValueError("missing 'coloring <n> <k>' header")
    n, k = header
    if len(rows) != n:
        raise ValueError(f"expected {n} color lines, found {len(rows)}")
    colors: list[Optional[int]] = [None] * n
    for lineno, v, c in rows:
        if not 0 <= v < n:
            raise ValueError(f"line {lineno}: vertex id {v} out of range 0..{n - 1}")
        if colors[v] is not None:
            raise ValueError(f"line {lineno}: duplicate vertex id {v}")
        if not 0 <= c < k:
            raise ValueError(f"line {lineno}: color {c} out of range 0..{k - 1}")
        colors[v] = c
    return Coloring(k, tuple(colors))  # type: ignore[arg-type]


def load_coloring(path) -> Coloring:
    with open(path, "r", encoding="ascii") as fh:
        return parse_coloring(fh.read())


def save_coloring(coloring: Coloring, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_coloring(coloring))


def format_certificate(cert: LrfCertificate) -> str:
    lines = [f"verdict: {cert.verdict}"]
    if cert.verdict == VIOLATION:
        lines.append("path: " + " ".join(str(v) for v in cert.path))
        lines.append(f"word: {cert.word}")
        lines.append(f"offset: {cert.offset}")
        lines.append(f"period: {cert.period}")
    return "\n".join(lines) + "\n"

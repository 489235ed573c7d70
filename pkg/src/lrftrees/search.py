"""Complete backtracking search for long-repetition-free colorings.

Vertices are assigned in breadth-first order. After coloring a vertex v,
only paths ending at v and lying inside the colored prefix can complete a
new long square (the square's subpath has v as its breadth-first-last
vertex, hence as an endpoint), so the incremental check scans exactly
those whole-path words. A brute-force census over all k**n colorings
serves as the completeness oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .coloring import Coloring, path_between, verify_lrf
from .trees import RootedTree

#: assignments tried before the search gives up
DEFAULT_NODE_LIMIT = 100_000_000

#: the census enumerates k**n colorings; refuse anything larger
CENSUS_GUARD = 1 << 20


@dataclass(frozen=True)
class Found:
    coloring: Coloring
    nodes_explored: int


@dataclass(frozen=True)
class Exhausted:
    nodes_explored: int


@dataclass(frozen=True)
class LimitReached:
    nodes_explored: int


def _whole_path_square(tree: RootedTree, colors, u: int, v: int) -> bool:
    """True when the entire color word of the u..v path is a long square."""
    # collect letters along both climbs to the LCA
    left = [colors[u]]
    right = [colors[v]]
    a, b = u, v
    while tree.depths[a] > tree.depths[b]:
        a = tree.parents[a]
        left.append(colors[a])
    while tree.depths[b] > tree.depths[a]:
        b = tree.parents[b]
        right.append(colors[b])
    while a != b:
        a = tree.parents[a]
        left.append(colors[a])
        b = tree.parents[b]
        right.append(colors[b])
    length = len(left) + len(right) - 1
    if length < 6 or length % 2:
        return False
    word = left + right[-2::-1]
    half = length // 2
    return word[:half] == word[half:]


def search_lrf_coloring(
    tree: RootedTree, k: int, node_limit: int = DEFAULT_NODE_LIMIT
) -> Found | Exhausted | LimitReached:
    """Exact search for an LRF k-coloring; deterministic for fixed inputs.

    The root's color is pinned to 0 (any valid coloring can be permuted to
    one with root color 0, so this loses nothing). A Found coloring is
    re-verified before it is returned; Exhausted means no coloring exists;
    LimitReached is explicitly inconclusive.
    """
    if k < 2:
        raise ValueError("at least 2 colors required")
    n = tree.n
    order = sorted(range(n), key=lambda v: (tree.depths[v], v))
    colors = [-1] * n
    trial = [0] * n
    explored = 0
    pos = 0
    while pos >= 0:
        if pos == n:
            found = Coloring(k, tuple(colors))
            cert = verify_lrf(tree, found)
            if not cert.is_valid:  # pragma: no cover - soundness guard
                raise RuntimeError("search produced a coloring that fails verification")
            return Found(found, explored)
        v = order[pos]
        c = trial[pos]
        if c >= (1 if pos == 0 else k):
            trial[pos] = 0
            colors[v] = -1
            pos -= 1
            continue
        trial[pos] = c + 1
        explored += 1
        if explored > node_limit:
            return LimitReached(explored)
        colors[v] = c
        if all(
            not _whole_path_square(tree, colors, v, order[q]) for q in range(pos)
        ):
            pos += 1
    return Exhausted(explored)


def maximal_paths(tree: RootedTree) -> list[list[int]]:
    """All paths between degree-1 vertex pairs, in lexicographic pair order."""
    ends = tree.degree_one_vertices()
    return [
        path_between(tree, ends[i], ends[j])
        for i in range(len(ends))
        for j in range(i + 1, len(ends))
    ]


def brute_force_census(tree: RootedTree, k: int) -> int:
    """Exact number of LRF k-colorings, enumerating all k**n assignments.

    Each packed coloring assigns vertex v the base-k digit v. Only maximal
    paths are checked (equivalent to all paths by factor monotonicity),
    each through a precomputed contains-a-long-square table for its
    length.
    """
    if k < 2:
        raise ValueError("at least 2 colors required")
    n = tree.n
    total = k**n
    if total > CENSUS_GUARD:
        raise ValueError(
            f"census guard exceeded: {k}**{n} colorings (limit {CENSUS_GUARD})"
        )
    paths = [p for p in maximal_paths(tree) if len(p) >= 6]
    if not paths:
        return total
    max_len = max(len(p) for p in paths)
    path_mat = np.zeros((len(paths), max_len), dtype=np.int64)
    plens = np.zeros(len(paths), dtype=np.int64)
    for i, p in enumerate(paths):
        plens[i] = len(p)
        path_mat[i, : len(p)] = p
    tables = {}
    offsets = np.zeros(len(paths), dtype=np.int64)
    chunks = []
    pos = 0
    for length in sorted({len(p) for p in paths}):
        tables[length] = (pos, _kernels.base_square_table(length, k))
        pos += k**length
    for i, p in enumerate(paths):
        offsets[i] = tables[len(p)][0]
    chunks = [tables[length][1] for length in sorted(tables)]
    table_data = np.concatenate(chunks)
    vertex_powers = np.array([k**v for v in range(n)], dtype=np.int64)
    return _kernels.count_valid_colorings(
        total, k, path_mat, plens, vertex_powers, table_data, offsets
    )

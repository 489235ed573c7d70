"""Rooted trees with dense integer vertex ids.

A tree on n vertices uses ids 0..n-1. ``parents[v]`` is -1 exactly at the
root, children lists are ascending, and ``depths[v]`` is the distance to
the root. Trees are immutable after construction; all queries are
read-only.

Text format (bit-exact): first line ``tree <n>``, then one ``<vertex>
<parent>`` line per vertex with -1 as the root's parent; ``#`` lines are
comments.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

#: default cap on materialised tree sizes (classic hosts of height >= 7 blow past it)
DEFAULT_SIZE_GUARD = 10_000_000


class RootedTree:
    """Immutable rooted tree; build via :func:`build_from_parent_list` or the builders."""

    __slots__ = ("n", "root", "parents", "children", "depths")

    def __init__(self, parents, children, depths, root):
        self.parents = parents
        self.children = children
        self.depths = depths
        self.root = root
        self.n = len(parents)

    @property
    def height(self) -> int:
        return max(self.depths)

    def degree(self, v: int) -> int:
        return len(self.children[v]) + (0 if v == self.root else 1)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if not self.children[v]]

    def degree_one_vertices(self) -> list[int]:
        """Endpoints of maximal paths in the underlying undirected tree."""
        return [v for v in range(self.n) if self.degree(v) == 1]

    def generation_sizes(self) -> list[int]:
        sizes = [0] * (self.height + 1)
        for d in self.depths:
            sizes[d] += 1
        return sizes

    def subtree_heights(self) -> list[int]:
        """Height of the subtree hanging from each vertex."""
        heights = [0] * self.n
        for v in sorted(range(self.n), key=self.depths.__getitem__, reverse=True):
            if self.children[v]:
                heights[v] = 1 + max(heights[c] for c in self.children[v])
        return heights

    def __eq__(self, other) -> bool:
        return isinstance(other, RootedTree) and self.parents == other.parents

    def __hash__(self):
        return hash(tuple(self.parents))

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n}, root={self.root}, height={self.height})"


def _check_vertex(tree: RootedTree, v: int) -> None:
    if not 0 <= v < tree.n:
        raise ValueError(f"vertex id {v} out of range 0..{tree.n - 1}")


def build_from_parent_list(parents: Sequence[Optional[int]]) -> RootedTree:
    """Validate a parent list (None or -1 marks the root) into a RootedTree."""
    seq = list(parents)
    n = len(seq)
    if n == 0:
        raise ValueError("empty parent list")
    norm = [-1 if p is None else int(p) for p in seq]
    roots = [i for i, p in enumerate(norm) if p == -1]
    if not roots:
        raise ValueError("no root: every vertex has a parent")
    if len(roots) > 1:
        raise ValueError(f"multiple roots: vertices {roots[0]} and {roots[1]}")
    root = roots[0]
    for i, p in enumerate(norm):
        if p != -1 and not 0 <= p < n:
            raise ValueError(f"vertex {i}: parent id {p} out of range")

    depths = [-1] * n
    depths[root] = 0
    mark = [0] * n
    for i in range(n):
        if depths[i] >= 0:
            continue
        chain = []
        v = i
        while depths[v] < 0:
            if mark[v] == i + 1:
                raise ValueError(f"cycle detected through vertex {v}")
            mark[v] = i + 1
            chain.append(v)
            v = norm[v]
        base = depths[v]
        for off, u in enumerate(reversed(chain), start=1):
            depths[u] = base + off

    children = [[] for _ in range(n)]
    for i, p in enumerate(norm):
        if p != -1:
            children[p].append(i)
    return RootedTree(norm, children, depths, root)


def lca(tree: RootedTree, u: int, v: int) -> int:
    """Lowest common ancestor by synchronised upward walks."""
    _check_vertex(tree, u)
    _check_vertex(tree, v)
    a, b = u, v
    while tree.depths[a] > tree.depths[b]:
        a = tree.parents[a]
    while tree.depths[b] > tree.depths[a]:
        b = tree.parents[b]
    while a != b:
        a = tree.parents[a]
        b = tree.parents[b]
    return a


def path_between(tree: RootedTree, u: int, v: int) -> list[int]:
    """The unique simple path from u to v, endpoints included."""
    _check_vertex(tree, u)
    _check_vertex(tree, v)
    left = [u]
    right = [v]
    a, b = u, v
    while tree.depths[a] > tree.depths[b]:
        a = tree.parents[a]
        left.append(a)
    while tree.depths[b] > tree.depths[a]:
        b = tree.parents[b]
        right.append(b)
    while a != b:
        a = tree.parents[a]
        left.append(a)
        b = tree.parents[b]
        right.append(b)
    return left + right[-2::-1]


def distance(tree: RootedTree, u: int, v: int) -> int:
    w = lca(tree, u, v)
    return tree.depths[u] + tree.depths[v] - 2 * tree.depths[w]


def _bfs(tree: RootedTree, start: int):
    dist = [-1] * tree.n
    prev = [-1] * tree.n
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        neighbours = list(tree.children[v])
        if v != tree.root:
            neighbours.append(tree.parents[v])
        for w in neighbours:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                prev[w] = v
                queue.append(w)
    return dist, prev


def _farthest(dist) -> int:
    best = 0
    for v, d in enumerate(dist):
        if d > dist[best]:
            best = v
    return best


def center_and_radius(tree: RootedTree) -> tuple[set[int], int]:
    """Center vertices and radius of the underlying undirected tree.

    Two farthest-vertex sweeps find a diametral path; its one or two middle
    vertices are the center and the radius is half the diameter, rounded
    up. The current root plays no role.
    """
    dist0, _ = _bfs(tree, tree.root)
    a = _farthest(dist0)
    dist_a, prev = _bfs(tree, a)
    b = _farthest(dist_a)
    diameter = dist_a[b]
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    centers = {path[diameter // 2], path[(diameter + 1) // 2]}
    return centers, (diameter + 1) // 2


def reroot(tree: RootedTree, new_root: int) -> RootedTree:
    """The same undirected tree, re-rooted at ``new_root``."""
    _check_vertex(tree, new_root)
    _, prev = _bfs(tree, new_root)
    parents = [None if v == new_root else prev[v] for v in range(tree.n)]
    return build_from_parent_list(parents)


# --------------------------------------------------------------------------
# exponential-fanout hosts
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TylerSpec:
    """Per-generation fanouts of a host tree: generation-j vertices get fanout[j] children."""

    height: int
    fanout: tuple[int, ...]

    def __post_init__(self):
        if self.height < 0:
            raise ValueError("height must be non-negative")
        if len(self.fanout) != self.height:
            raise ValueError(
                f"fanout list has {len(self.fanout)} entries for height {self.height}"
            )
        if any(f < 1 for f in self.fanout):
            raise ValueError("all fanouts must be at least 1")


def classic_tyler(height: int) -> TylerSpec:
    """The classic spec: generation-j vertices have 2**(height-j) + 1 children."""
    if height < 0:
        raise ValueError("height must be non-negative")
    return TylerSpec(height, tuple(2 ** (height - j) + 1 for j in range(height)))


def predicted_vertex_count(spec: TylerSpec) -> int:
    total = 1
    gen = 1
    for f in spec.fanout:
        gen *= f
        total += gen
    return total


class TylerCount(NamedTuple):
    vertices: int
    subtree_multiplicity: int


def tyler_vertex_count(height: int) -> TylerCount:
    """Exact vertex count of the classic height-n host, plus how many
    height-(n-1) hosts it contains (one per child of the root: 2**n + 1)."""
    if height < 0:
        raise ValueError("height must be non-negative")
    total = 1
    for j in range(height):
        prod = 1
        for t in range(height - j, height + 1):
            prod *= 2**t + 1
        total += prod
    return TylerCount(total, 2**height + 1)


def build_tyler(spec: TylerSpec, size_guard: int = DEFAULT_SIZE_GUARD) -> RootedTree:
    """Materialise the host tree with breadth-first ids, root 0."""
    total = predicted_vertex_count(spec)
    if total > size_guard:
        raise ValueError(
            f"predicted vertex count {total} exceeds size guard {size_guard}"
        )
    parents = [-1]
    depths = [0]
    generation = [0]
    for j, f in enumerate(spec.fanout):
        nxt = []
        for v in generation:
            for _ in range(f):
                nxt.append(len(parents))
                parents.append(v)
                depths.append(j + 1)
        generation = nxt
    children = [[] for _ in range(total)]
    for i, p in enumerate(parents):
        if p != -1:
            children[p].append(i)
    return RootedTree(parents, children, depths, 0)


# --------------------------------------------------------------------------
# text format
# --------------------------------------------------------------------------


def format_tree(tree: RootedTree) -> str:
    lines = [f"tree {tree.n}"]
    lines.extend(f"{v} {tree.parents[v]}" for v in range(tree.n))
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> RootedTree:
    """Parse the tree text format, with line-numbered diagnostics."""
    rows = []
    header = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "tree":
                raise ValueError(f"line {lineno}: expected 'tree <n>', got {raw!r}")
            try:
                header = int(parts[1])
            except ValueError:
                raise ValueError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if header < 1:
                raise ValueError(f"line {lineno}: vertex count must be positive")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<vertex> <parent>', got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {raw!r}") from None
    if header is None:
        raise ValueError("missing 'tree <n>' header")
    if len(rows) != header:
        raise ValueError(f"expected {header} vertex lines, found {len(rows)}")
    parents: list[Optional[int]] = [None] * header
    seen = [False] * header
    for lineno, v, p in rows:
        if not 0 <= v < header:
            raise ValueError(f"line {lineno}: vertex id {v} out of range 0..{header - 1}")
        if seen[v]:
            raise ValueError(f"line {lineno}: duplicate vertex id {v}")
        seen[v] = True
        parents[v] = None if p == -1 else p
    return build_from_parent_list(parents)


def load_tree(path) -> RootedTree:
    with open(path, "r", encoding="ascii") as fh:
        return parse_tree(fh.read())


def save_tree(tree: RootedTree, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_tree(tree))


def edge_lines(tree: RootedTree) -> list[str]:
    """One ``<parent> <child>`` line per edge, for export to graph tools."""
    return [f"{tree.parents[v]} {v}" for v in range(tree.n) if v != tree.root]

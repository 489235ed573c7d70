"""Monochromatic binary subtrees by pigeonhole, and palindrome reflection.

Any 2-colored host whose generation-j fanout is at least 2**(height-j)+1
contains a complete binary subtree, rooted at the host root, whose
generations 0..height-1 are each monochromatic. The extraction is
constructive: siblings are grouped by the full color signature of their
extracted subtrees and a duplicate pair is kept. On other hosts the same
dynamic grouping is attempted best-effort and failure is reported.

Reflecting a long palindrome inside the recorded generation word across
its first letter yields a path whose color word contains a long square;
that is the refutation pipeline for sufficiently tall hosts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import VIOLATION, Coloring, LrfCertificate, _check_pair
from .trees import RootedTree, path_between
from .words import (
    PalindromeWitness,
    SquareWitness,
    contains_long_palindrome,
    find_long_square,
)


@dataclass(frozen=True)
class EmbeddedBinaryTree:
    """A complete binary subtree mapped into a host tree.

    ``nodes`` maps L/R addresses (the empty address is the root) to host
    vertex ids; ``generation_word`` records the shared color of each of
    generations 0..height-1.
    """

    height: int
    nodes: dict[str, int] = field(compare=False)
    generation_word: str

    def vertices_at(self, depth: int) -> list[int]:
        return [v for addr, v in self.nodes.items() if len(addr) == depth]


@dataclass(frozen=True)
class ExtractionFailure:
    depth: int
    explanation: str


@dataclass(frozen=True)
class NotRefuted:
    reason: str


def verify_embedding(
    tree: RootedTree, coloring: Coloring, emb: EmbeddedBinaryTree
) -> list[str]:
    """Re-check all embedding invariants; returns a list of problems (empty = good)."""
    problems = []
    h = emb.height
    if emb.nodes.get("") != tree.root:
        problems.append("abstract root is not mapped to the host root")
    if len(emb.nodes) != 2 ** (h + 1) - 1:
        problems.append(
            f"expected {2 ** (h + 1) - 1} embedded vertices, found {len(emb.nodes)}"
        )
    for addr, v in emb.nodes.items():
        if addr:
            parent_addr = addr[:-1]
            if parent_addr not in emb.nodes:
                problems.append(f"address {addr}: parent address missing")
                continue
            if tree.parents[v] != emb.nodes[parent_addr]:
                problems.append(f"address {addr}: host vertex {v} not a child of its image parent")
        if tree.depths[v] != len(addr):
            problems.append(f"address {addr}: host depth {tree.depths[v]} != {len(addr)}")
    for addr, v in emb.nodes.items():
        sibling = addr[:-1] + ("R" if addr.endswith("L") else "L") if addr else None
        if sibling and emb.nodes.get(sibling) == v:
            problems.append(f"address {addr}: shares its host vertex with its sibling")
    if len(emb.generation_word) != h:
        problems.append(
            f"generation word has {len(emb.generation_word)} letters for height {h}"
        )
    else:
        for i in range(h):
            expected = int(emb.generation_word[i])
            for v in emb.vertices_at(i):
                if coloring.colors[v] != expected:
                    problems.append(
                        f"generation {i}: vertex {v} has color {coloring.colors[v]}, "
                        f"recorded {expected}"
                    )
                    break
    return problems


def extract_binary_subtree(
    tree: RootedTree, coloring: Coloring
) -> EmbeddedBinaryTree | ExtractionFailure:
    """Extract a generation-monochromatic binary subtree of height(tree).

    Children are grouped by signature = the full generation color word of
    their own extracted subtree (their color first); the lexicographically
    smallest pair of child ids with equal signatures is kept, which makes
    the result deterministic. Success is guaranteed when the generation-j
    fanout is at least 2**(height-j)+1 for every j; elsewhere duplicates
    are found dynamically or a FAILURE reports the blocked depth.
    """
    if coloring.k != 2:
        raise ValueError("extraction requires a 2-coloring")
    _check_pair(tree, coloring)
    n = tree.height
    colors = coloring.colors
    sub_heights = tree.subtree_heights()

    def attempt(v: int, m: int):
        if m == 0:
            return {"": v}, (colors[v],)
        groups: dict[tuple, list] = {}
        for c in tree.children[v]:
            if sub_heights[c] < m - 1:
                continue
            sub = attempt(c, m - 1)
            if sub is None:
                continue
            groups.setdefault(sub[1], []).append((c, sub[0]))
        best = None
        for word, members in groups.items():
            if len(members) >= 2:
                cand = (members[0], members[1], word)
                if best is None or (cand[0][0], cand[1][0]) < (best[0][0], best[1][0]):
                    best = cand
        if best is None:
            return None
        (c1, nodes1), (c2, nodes2), word = best
        nodes = {"": v}
        for addr, hv in nodes1.items():
            nodes["L" + addr] = hv
        for addr, hv in nodes2.items():
            nodes["R" + addr] = hv
        return nodes, (colors[v],) + word

    result = attempt(tree.root, n)
    if result is None:
        kids = tree.children[tree.root]
        signatures = {}
        extractable = 0
        for c in kids:
            if sub_heights[c] >= n - 1:
                sub = attempt(c, n - 1)
                if sub is not None:
                    extractable += 1
                    signatures.setdefault(sub[1], []).append(c)
        explanation = (
            f"no duplicate signature pair at vertex {tree.root}: "
            f"{extractable} of {len(kids)} children extractable, "
            f"{len(signatures)} distinct signatures"
        )
        return ExtractionFailure(0, explanation)

    nodes, full_word = result
    emb = EmbeddedBinaryTree(
        height=n,
        nodes=nodes,
        generation_word="".join(str(c) for c in full_word[:n]),
    )
    problems = verify_embedding(tree, coloring, emb)
    if problems:  # pragma: no cover - internal consistency guard
        raise RuntimeError("extraction produced an invalid embedding: " + "; ".join(problems))
    return emb


def format_embedding(emb: EmbeddedBinaryTree, coloring: Coloring) -> str:
    """One line per embedded vertex: ``<address|-> <host-vertex-id> <color>``."""
    lines = []
    for addr in sorted(emb.nodes, key=lambda a: (len(a), a)):
        v = emb.nodes[addr]
        lines.append(f"{addr or '-'} {v} {coloring.colors[v]}")
    return "\n".join(lines) + "\n"


def reflect_word(word: str) -> tuple[str, SquareWitness, PalindromeWitness]:
    """Reflect the first long palindrome of ``word`` into a long square.

    For the palindrome p = word[j..j+m] (length m+1, m in {3, 4}; one is
    guaranteed in any binary word of length >= 9), the reflected word
    c = word[j+m]..word[j+1] . word[j] . word[j+1]..word[j+m] has length
    2m+1 and starts with the square c[0..m-1] c[m..2m-1].
    """
    if not set(word) <= {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")
    if len(word) < 9:
        raise ValueError(
            f"reflection needs a word of length >= 9, got {len(word)} "
            "(shorter binary words can avoid long palindromes)"
        )
    pal = contains_long_palindrome(word)
    if pal is None:  # pragma: no cover - impossible at length >= 9
        raise RuntimeError(f"no long palindrome found in {word!r}")
    j, m = pal.offset, pal.length - 1
    reflected = word[j : j + m + 1][::-1] + word[j + 1 : j + m + 1]
    if reflected[:m] != reflected[m : 2 * m]:  # pragma: no cover - construction guarantee
        raise RuntimeError(f"reflection of {word!r} lost its square: {reflected!r}")
    return reflected, SquareWitness(0, m), pal


def refute(tree: RootedTree, coloring: Coloring) -> LrfCertificate | NotRefuted:
    """Pigeonhole refutation pipeline for 2-colorings of tall hosts.

    Extract a monochromatic binary subtree, reflect a long palindrome of
    its generation word into a long square, and materialise the witness
    path in the host (climb the embedded spine from depth j+m to the
    palindrome start j, then descend the sibling branch back to depth
    j+m). The certificate is re-verified independently before it is
    returned. Hosts whose extraction fails, or whose generation word is
    shorter than 9 letters, yield NotRefuted: the method is inconclusive
    there, not a validity proof.
    """
    if coloring.k != 2:
        raise ValueError("refutation requires a 2-coloring")
    outcome = extract_binary_subtree(tree, coloring)
    if isinstance(outcome, ExtractionFailure):
        return NotRefuted(f"extraction failed at depth {outcome.depth}")
    gen_word = outcome.generation_word
    if len(gen_word) < 9:
        return NotRefuted(f"generation word length {len(gen_word)} < 9")
    reflected, _square, pal = reflect_word(gen_word)
    j, m = pal.offset, pal.length - 1
    climb = [outcome.nodes["L" * t] for t in range(j + m, j - 1, -1)]
    descend = [outcome.nodes["L" * j + "R" + "L" * (s - 1)] for s in range(1, m + 1)]
    path = climb + descend

    # independent re-verification: the path is the tree path between its
    # endpoints, its color word is the reflected word, and a scan finds a
    # long square in it
    if path != path_between(tree, path[0], path[-1]):  # pragma: no cover
        raise RuntimeError("materialised witness is not a tree path")
    observed = "".join(str(coloring.colors[v]) for v in path)
    if observed != reflected:  # pragma: no cover
        raise RuntimeError(
            f"witness path word {observed!r} differs from reflected word {reflected!r}"
        )
    hit = find_long_square(observed)
    if hit is None:  # pragma: no cover
        raise RuntimeError(f"no long square in witness word {observed!r}")
    return LrfCertificate(
        VIOLATION,
        path=tuple(path),
        word=observed,
        offset=hit.offset,
        period=hit.period,
    )

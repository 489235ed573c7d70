"""Command-line surface for batch runs with reproducible, bit-exact output.

Exit codes: 0 = property holds / object found; 1 = property violated,
unsat, refuted, or inconclusive (the report body distinguishes these);
2 = usage or input-format error. Reports are line-oriented ``key: value``
text; no timestamps appear in any payload.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels, coloring, pigeonhole, search, trees, words


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)


# --------------------------------------------------------------------------
# word commands
# --------------------------------------------------------------------------


def _cmd_word_check(args) -> int:
    w = args.word
    square = words.contains_long_square(w)
    pal = words.contains_long_palindrome(w)
    print(f"word: {w}")
    print(f"length: {len(w)}")
    print(f"long-square-free: {'no' if square else 'yes'}")
    if square:
        print(f"square-offset: {square.offset}")
        print(f"square-period: {square.period}")
    print(f"long-palindrome-free: {'no' if pal else 'yes'}")
    if pal:
        print(f"palindrome-offset: {pal.offset}")
        print(f"palindrome-length: {pal.length}")
    return 0 if square is None and pal is None else 1


def _census_mask(length: int, predicate: str, threads: int):
    mask_fn = (
        _kernels.square_free_mask if predicate == "lsf" else _kernels.palindrome_free_mask
    )
    total = 1 << length
    if threads <= 1 or total < threads:
        return mask_fn(length)
    bounds = [(i * total) // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(
            pool.map(lambda se: mask_fn(length, se[0], se[1]), zip(bounds, bounds[1:]))
        )
    return np.concatenate(parts)


def _cmd_word_census(args) -> int:
    if args.length < 0 or args.length > words.MAX_CENSUS_LENGTH:
        return _fail(
            f"census length {args.length} outside 0..{words.MAX_CENSUS_LENGTH}"
        )
    if args.length == 0:
        hits = [""]
    else:
        mask = _census_mask(args.length, args.predicate, args.threads)
        hits = [
            format(int(v), "b").zfill(args.length) for v in np.nonzero(mask)[0]
        ]
    print(f"length: {args.length}")
    print(f"predicate: {args.predicate}")
    print(f"count: {len(hits)}")
    for w in hits:
        print(w)
    return 0 if hits else 1


# --------------------------------------------------------------------------
# lemma commands
# --------------------------------------------------------------------------


def _cmd_lemma_abxba(args) -> int:
    report = words.check_lemma_abxba(args.max, threads=args.threads)
    print(f"checked: {report.words_checked}")
    print(f"counterexamples: {len(report.counterexamples)}")
    for w in report.counterexamples:
        print(w)
    print(f"holds: {'yes' if report.holds else 'no'}")
    return 0 if report.holds else 1


def _cmd_lemma_palindrome9(args) -> int:
    report = words.check_lemma_palindrome9()
    with_pal = 512 - len(report.length9_free)
    print("length-9 words: 512")
    print(f"length-9 containing long palindrome: {with_pal}/512")
    print(f"length-8 palindrome-free count: {len(report.length8_free)}")
    print("length-8 palindrome-free: " + " ".join(report.length8_free))
    ok = report.holds and report.boundary_ok
    print(f"holds: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def _cmd_lemma_reflect(args) -> int:
    period_counts = {3: 0, 4: 0}
    failures = 0
    for packed in range(512):
        w = format(packed, "b").zfill(9)
        reflected, square, _pal = pigeonhole.reflect_word(w)
        ok = (
            reflected[: square.period] == reflected[square.period : 2 * square.period]
            and words.contains_long_square(reflected) is not None
        )
        if ok:
            period_counts[square.period] += 1
        else:  # pragma: no cover - construction guarantee
            failures += 1
    print("words: 512")
    print(f"reflections verified: {512 - failures}")
    print(f"period-3 squares: {period_counts[3]}")
    print(f"period-4 squares: {period_counts[4]}")
    print(f"holds: {'yes' if failures == 0 else 'no'}")
    return 0 if failures == 0 else 1


# --------------------------------------------------------------------------
# tree commands
# --------------------------------------------------------------------------


def _cmd_tree_info(args) -> int:
    tree = trees.load_tree(args.file)
    centers, radius = trees.center_and_radius(tree)
    print(f"vertices: {tree.n}")
    print(f"height: {tree.height}")
    print(f"radius: {radius}")
    print("center: " + " ".join(str(v) for v in sorted(centers)))
    print("generation sizes: " + " ".join(str(s) for s in tree.generation_sizes()))
    if args.edges:
        for line in trees.edge_lines(tree):
            print(line)
    return 0


def _cmd_tree_tyler(args) -> int:
    if args.fanout is not None:
        try:
            fanout = tuple(int(tok) for tok in args.fanout.split(","))
        except ValueError:
            return _fail(f"bad fanout list {args.fanout!r}")
        height = args.height if args.height is not None else len(fanout)
        spec = trees.TylerSpec(height, fanout)
    else:
        if args.height is None:
            return _fail("need --height or --fanout")
        spec = trees.classic_tyler(args.height)
    tree = trees.build_tyler(spec, size_guard=args.guard)
    _emit(trees.format_tree(tree), args.out)
    if args.out is not None:
        print(f"vertices: {tree.n}")
        print(f"out: {args.out}")
    return 0


def _cmd_tree_count(args) -> int:
    count = trees.tyler_vertex_count(args.height)
    print(f"height: {args.height}")
    print(f"vertices: {count.vertices}")
    print(f"sub-tree multiplicity: {count.subtree_multiplicity}")
    return 0


# --------------------------------------------------------------------------
# color commands
# --------------------------------------------------------------------------


def _cmd_color_apply(args) -> int:
    tree = trees.load_tree(args.tree)
    col = coloring.generation_coloring(tree, args.word)
    _emit(coloring.format_coloring(col), args.out)
    if args.out is not None:
        print(f"out: {args.out}")
    return 0


def _load_pair(tree_path, coloring_path):
    tree = trees.load_tree(tree_path)
    col = coloring.load_coloring(coloring_path)
    if col.n != tree.n:
        raise ValueError(
            f"coloring covers {col.n} vertices but tree has {tree.n}"
        )
    return tree, col


def _cmd_color_verify(args) -> int:
    tree, col = _load_pair(args.tree, args.coloring)
    if args.sample is not None:
        print("mode: sampled")
        cert = coloring.verify_lrf_sampled(tree, col, args.sample, seed=args.seed)
    elif args.all_pairs:
        print("mode: all-pairs")
        cert = coloring.verify_lrf_all_pairs(tree, col)
    else:
        cert = coloring.verify_lrf(tree, col)
    sys.stdout.write(coloring.format_certificate(cert))
    return 0 if cert.is_valid else 1


def _cmd_color_reduce(args) -> int:
    report = coloring.prop2_reduction(args.word, args.height)
    print(f"verdict: {report.verdict}")
    print(f"turn words checked: {report.turn_words_checked}")
    if report.witness is not None:
        w = report.witness
        if w.turn is None:
            print("turn: monotone")
        else:
            print("turn: " + " ".join(str(t) for t in w.turn))
        print(f"word: {w.word}")
        print(f"offset: {w.offset}")
        print(f"period: {w.period}")
    return 0 if report.is_valid else 1


def _cmd_color_search(args) -> int:
    tree = trees.load_tree(args.tree)
    result = search.search_lrf_coloring(tree, args.colors, node_limit=args.limit)
    if isinstance(result, search.Found):
        sys.stdout.write(coloring.format_coloring(result.coloring))
        return 0
    if isinstance(result, search.Exhausted):
        print(f"unsat {result.nodes_explored}")
        return 1
    print(f"limit {result.nodes_explored}")
    return 1


def _cmd_color_census(args) -> int:
    tree = trees.load_tree(args.tree)
    count = search.brute_force_census(tree, args.colors)
    print(f"count: {count}")
    return 0 if count > 0 else 1


def _cmd_refute(args) -> int:
    tree, col = _load_pair(args.tree, args.coloring)
    outcome = pigeonhole.refute(tree, col)
    if isinstance(outcome, pigeonhole.NotRefuted):
        print("verdict: NOT-REFUTED")
        print(f"reason: {outcome.reason}")
    else:
        sys.stdout.write(coloring.format_certificate(outcome))
    return 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrftrees",
        description="Long-square-free words and long-repetition-free tree 2-colorings.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    word = top.add_parser("word", help="single-word predicates and censuses")
    word_sub = word.add_subparsers(dest="subcommand", required=True)
    p = word_sub.add_parser("check", help="long-square / long-palindrome report")
    p.add_argument("word")
    p.set_defaults(func=_cmd_word_check)
    p = word_sub.add_parser("census", help="enumerate all satisfying words")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--predicate", choices=("lsf", "lpf"), required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_word_census)

    lemma = top.add_parser("lemma", help="exhaustive word-level sweeps")
    lemma_sub = lemma.add_subparsers(dest="subcommand", required=True)
    p = lemma_sub.add_parser("abxba", help="01.x.10 words contain long palindromes")
    p.add_argument("--max", type=int, required=True, help="largest |x| to sweep")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_lemma_abxba)
    p = lemma_sub.add_parser(
        "palindrome9", help="length-9 words contain long palindromes"
    )
    p.set_defaults(func=_cmd_lemma_palindrome9)
    p = lemma_sub.add_parser(
        "reflect", help="reflect all 512 length-9 words into long squares"
    )
    p.set_defaults(func=_cmd_lemma_reflect)

    tree = top.add_parser("tree", help="tree construction and queries")
    tree_sub = tree.add_subparsers(dest="subcommand", required=True)
    p = tree_sub.add_parser("info", help="metrics of a tree file")
    p.add_argument("file")
    p.add_argument("--edges", action="store_true", help="also dump '<parent> <child>' lines")
    p.set_defaults(func=_cmd_tree_info)
    p = tree_sub.add_parser("tyler", help="build an exponential-fanout host tree")
    p.add_argument("--height", type=int)
    p.add_argument("--fanout", help="comma-separated per-generation child counts")
    p.add_argument("--guard", type=int, default=trees.DEFAULT_SIZE_GUARD)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_tree_tyler)
    p = tree_sub.add_parser("count", help="exact classic host vertex count")
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=_cmd_tree_count)

    color = top.add_parser("color", help="colorings: apply, verify, reduce, search")
    color_sub = color.add_subparsers(dest="subcommand", required=True)
    p = color_sub.add_parser("apply", help="generation-color a tree by a word")
    p.add_argument("tree")
    p.add_argument("--word", required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=_cmd_color_apply)
    p = color_sub.add_parser("verify", help="long-repetition-free verification")
    p.add_argument("tree")
    p.add_argument("coloring")
    p.add_argument("--all-pairs", action="store_true", help="naive oracle strategy")
    p.add_argument("--sample", type=int, help="flagged fast mode: scan N random pairs")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_color_verify)
    p = color_sub.add_parser("reduce", help="finite turn-word reduction for a coloring word")
    p.add_argument("--word", required=True)
    p.add_argument("--height", type=int, required=True)
    p.set_defaults(func=_cmd_color_reduce)
    p = color_sub.add_parser("search", help="complete backtracking search")
    p.add_argument("tree")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--limit", type=int, default=search.DEFAULT_NODE_LIMIT)
    p.set_defaults(func=_cmd_color_search)
    p = color_sub.add_parser("census", help="count all valid colorings")
    p.add_argument("tree")
    p.add_argument("--colors", type=int, required=True)
    p.set_defaults(func=_cmd_color_census)

    p = top.add_parser("refute", help="pigeonhole refutation pipeline")
    p.add_argument("tree")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_refute)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        return _fail(f"cannot open {exc.filename}")
    except (ValueError, OSError) as exc:
        return _fail(str(exc))


def console_main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()

"""Long-square-free words and long-repetition-free 2-colorings of trees."""

from .coloring import (
    Coloring,
    LrfCertificate,
    ReductionReport,
    ReductionWitness,
    generation_coloring,
    path_letters,
    path_word,
    prop2_reduction,
    recheck_certificate,
    verify_lrf,
    verify_lrf_all_pairs,
    verify_lrf_sampled,
)
from .pigeonhole import (
    EmbeddedBinaryTree,
    ExtractionFailure,
    NotRefuted,
    extract_binary_subtree,
    reflect_word,
    refute,
    verify_embedding,
)
from .search import (
    Exhausted,
    Found,
    LimitReached,
    brute_force_census,
    maximal_paths,
    search_lrf_coloring,
)
from .trees import (
    RootedTree,
    TylerCount,
    TylerSpec,
    build_from_parent_list,
    build_tyler,
    center_and_radius,
    classic_tyler,
    distance,
    lca,
    path_between,
    reroot,
    tyler_vertex_count,
)
from .words import (
    PalindromeWitness,
    SquareWitness,
    check_lemma_abxba,
    check_lemma_palindrome9,
    complement,
    contains_long_palindrome,
    contains_long_square,
    lpf_census,
    lsf_census,
    reverse,
    window_check,
)

__version__ = "0.1.0"

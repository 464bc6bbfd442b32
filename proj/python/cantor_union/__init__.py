"""Self-similarity of unions of a homogeneous symmetric Cantor set with its
translations: admissibility decisions, constructions, and generating IFSs."""

from cantor_union._core import (
    TranslationVector,
    conjugate,
    construct_admissible,
    corollary_m1,
    decide,
    enumerate_admissible,
    extract_ifs,
    graph_dot,
    greedy_coding,
    is_admissible,
    scale,
    verify_numeric,
    verify_symbolic,
)

__all__ = [
    "TranslationVector",
    "conjugate",
    "construct_admissible",
    "corollary_m1",
    "decide",
    "enumerate_admissible",
    "extract_ifs",
    "graph_dot",
    "greedy_coding",
    "is_admissible",
    "scale",
    "verify_numeric",
    "verify_symbolic",
]

"""Exact counts of labeled simple graphs realizing a fixed degree sequence."""

from ._degseq import (  # noqa: F401
    MemoCache,
    __version__,
    binary_tree_count,
    bipartite_count_eq8,
    bipartite_count_raw,
    brute_force_count,
    brute_force_multiset_count,
    canonicalize,
    count,
    count_leaves,
    erdos_gallai,
    havel_hakimi,
    mckay_count,
    mckay_multiplication_count,
    moon_tree_count,
    parse_sequence_spec,
    regular_count,
)

__all__ = [
    "MemoCache",
    "binary_tree_count",
    "bipartite_count_eq8",
    "bipartite_count_raw",
    "brute_force_count",
    "brute_force_multiset_count",
    "canonicalize",
    "count",
    "count_leaves",
    "erdos_gallai",
    "havel_hakimi",
    "mckay_count",
    "mckay_multiplication_count",
    "moon_tree_count",
    "parse_sequence_spec",
    "regular_count",
]

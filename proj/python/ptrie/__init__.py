"""Priority trie: a 2^K-ary trie over key digits with per-layer occupancy
BSTs and a doubly linked list of FIFO-queue nodes. Updates cost
O(M/K + K); min/max/next/prev are O(1); duplicate keys drain stably."""

from ptrie._ptrie import (
    FloatPTrie,
    SignedPTrie,
    StringPTrie,
    UIntPTrie,
    avg_layers,
    empirical_profile,
    expected_layers,
    layer_series_total,
    prob_group,
)

__all__ = [
    "UIntPTrie",
    "SignedPTrie",
    "FloatPTrie",
    "StringPTrie",
    "prob_group",
    "expected_layers",
    "avg_layers",
    "layer_series_total",
    "empirical_profile",
]

"""Python bindings for the gogkit C++ core."""

from ._gogkit import (
    Document,
    GFamilyError,
    ParseError,
    WordError,
    analyze,
    bs_tail_functional,
    classify,
    gfamily_verify,
    load,
    parse,
    q_ratio,
    reduce,
    tree_valences,
)

__all__ = [
    "Document",
    "GFamilyError",
    "ParseError",
    "WordError",
    "analyze",
    "bs_tail_functional",
    "classify",
    "gfamily_verify",
    "load",
    "parse",
    "q_ratio",
    "reduce",
    "tree_valences",
]

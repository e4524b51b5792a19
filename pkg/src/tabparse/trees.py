"""Parse tree container shared by the parsers and the brute-force oracle.

Kept deliberately free of algorithm code so that independent implementations
can produce and compare trees without pulling each other in.
"""

from __future__ import annotations

from typing import NamedTuple, Optional


class ParseTree(NamedTuple):
    """An ordered tree over grammar symbols.

    ``children is None`` marks a terminal leaf.  An empty tuple marks a
    nonterminal node produced by an epsilon rule, which is a different thing.
    """

    label: str
    children: Optional[tuple["ParseTree", ...]]

    @property
    def is_leaf(self) -> bool:
        return self.children is None


def leaf(symbol: str) -> ParseTree:
    return ParseTree(symbol, None)


def node(symbol: str, children) -> ParseTree:
    return ParseTree(symbol, tuple(children))


def tree_yield(t: ParseTree) -> tuple[str, ...]:
    """Frontier of the tree, left to right.  Epsilon nodes contribute nothing."""
    if t.is_leaf:
        return (t.label,)
    out = []
    for c in t.children:
        out.extend(tree_yield(c))
    return tuple(out)


def tree_depth(t: ParseTree) -> int:
    """Number of nonterminal nodes on the longest root-to-frontier path."""
    if t.is_leaf:
        return 0
    return 1 + max((tree_depth(c) for c in t.children), default=0)


def render_tree(t: ParseTree) -> str:
    """Bracketed s-expression: ``(A (B a) (C b))``; a bare leaf renders as its
    token and an epsilon node as ``(A)``."""
    if t.is_leaf:
        return t.label
    inner = " ".join([t.label] + [render_tree(c) for c in t.children])
    return f"({inner})"


def validate_tree(grammar, t: ParseTree) -> bool:
    """True iff every internal node applies a rule of ``grammar`` and every
    leaf is one of its terminals."""
    if t.is_leaf:
        return t.label in grammar.terminals
    if t.label not in grammar.nonterminals:
        return False
    body = tuple(c.label for c in t.children)
    if (t.label, body) not in grammar.rule_index:
        return False
    return all(validate_tree(grammar, c) for c in t.children)

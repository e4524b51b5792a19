"""Bottom-up matrix recognition for grammars in Chomsky normal form.

T[j,i] holds the nonterminals deriving tokens j..i, filled column by
column: for each end position, first the lexical entry, then wider spans in
order of decreasing start, so both halves of every binary split are ready
when it is tried.
"""

from __future__ import annotations

from collections import defaultdict
from typing import NamedTuple, Optional

from .grammar import Grammar, GrammarError, Rule, is_cnf


class CkyJustification(NamedTuple):
    rule: Rule
    split: Optional[int]  # None for lexical entries


class CkyChart:
    def __init__(self, grammar: Grammar, tokens):
        self.grammar = grammar
        self.tokens = tuple(tokens)
        self.cells: dict[tuple[int, int], set[str]] = defaultdict(set)
        # (start, nonterminal, end) -> how it got there
        self.justifications: dict[tuple[int, str, int], list[CkyJustification]] = {}
        self.fired = 0


def cky_parse(g: Grammar, tokens) -> CkyChart:
    if not is_cnf(g):
        raise GrammarError("matrix recognition needs Chomsky normal form")
    tokens = tuple(tokens)
    n = len(tokens)
    c = CkyChart(g, tokens)
    lexical = defaultdict(list)
    binary = []
    for rule in g.rules:
        if len(rule.rhs) == 1:
            lexical[rule.rhs[0]].append(rule)
        else:
            binary.append(rule)

    def add(start: int, symbol: str, end: int, just: CkyJustification) -> None:
        c.fired += 1
        c.cells[(start, end)].add(symbol)
        c.justifications.setdefault((start, symbol, end), []).append(just)

    for i in range(1, n + 1):
        for rule in lexical.get(tokens[i - 1], ()):
            add(i - 1, rule.lhs, i, CkyJustification(rule, None))
        for k in range(i - 2, -1, -1):
            for j in range(k + 1, i):
                left = c.cells.get((k, j), ())
                right = c.cells.get((j, i), ())
                for rule in binary:
                    if rule.rhs[0] in left and rule.rhs[1] in right:
                        add(k, rule.lhs, i, CkyJustification(rule, j))
    return c


def cky_recognized(c: CkyChart) -> bool:
    n = len(c.tokens)
    return n > 0 and c.grammar.start in c.cells.get((0, n), ())


def dump_matrix(c: CkyChart) -> str:
    lines = []
    for j, i in sorted(c.cells):
        cell = c.cells[(j, i)]
        if cell:
            lines.append(f"T[{j},{i}]: " + ", ".join(sorted(cell)))
    return "\n".join(lines)

"""Agenda-driven recognition over dotted-rule items.

Items are (origin, dotted rule, end): the rule's consumed prefix derives
tokens origin..end and the whole rule was predicted at `origin`.  Matching
is symmetric like the table engine's, completions fire no matter whether
the active or the completed partner shows up second, so agenda order does
not affect the result.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import NamedTuple, Optional

from .grammar import Grammar, GrammarError
from .strategies import DottedRule


class EarleyItem(NamedTuple):
    origin: int
    dotted: DottedRule
    end: int

    def __str__(self) -> str:
        return f"( {self.origin} , {self.dotted} , {self.end} )"


class EarleyJustification(NamedTuple):
    tag: str  # "init" | "predict" | "scan" | "complete"
    antecedents: tuple[EarleyItem, ...]
    token: Optional[str]


class EarleyChart:
    def __init__(self, grammar: Grammar, tokens):
        self.grammar = grammar
        self.tokens = tuple(tokens)
        self.items: set[EarleyItem] = set()
        self.justifications: dict[EarleyItem, list[EarleyJustification]] = {}
        self.fired = 0
        # Active items keyed by (their goal symbol, their end position);
        # completed items keyed by (their left-hand side, their origin).
        self.active_at: dict[tuple[str, int], list[EarleyItem]] = defaultdict(list)
        self.completed_at: dict[tuple[str, int], list[EarleyItem]] = defaultdict(list)
        self._seen: set[tuple[EarleyItem, EarleyJustification]] = set()

    def final_item(self) -> EarleyItem:
        (start_rule,) = self.grammar.start_rules()
        return EarleyItem(
            0, DottedRule(start_rule, len(start_rule.rhs)), len(self.tokens)
        )


def earley_parse(g: Grammar, tokens, agenda_order: str = "lifo") -> EarleyChart:
    if agenda_order not in ("lifo", "fifo"):
        raise ValueError(f"unknown agenda order {agenda_order!r}")
    starts = g.start_rules()
    if len(starts) != 1:
        raise GrammarError(
            f"needs a single {g.start} rule; augment the grammar first"
        )
    tokens = tuple(tokens)
    n = len(tokens)
    c = EarleyChart(g, tokens)
    agenda: deque[EarleyItem] = deque()

    def add(item: EarleyItem, just: EarleyJustification) -> None:
        c.fired += 1
        key = (item, just)
        if key in c._seen:
            return
        c._seen.add(key)
        c.justifications.setdefault(item, []).append(just)
        if item not in c.items:
            c.items.add(item)
            goal = item.dotted.goal
            if goal is None:
                c.completed_at[(item.dotted.rule.lhs, item.origin)].append(item)
            else:
                c.active_at[(goal, item.end)].append(item)
            agenda.append(item)

    add(
        EarleyItem(0, DottedRule(starts[0], 0), 0),
        EarleyJustification("init", (), None),
    )

    nonterminals = g.nonterminals
    while agenda:
        item = agenda.pop() if agenda_order == "lifo" else agenda.popleft()
        goal = item.dotted.goal
        if goal is None:
            lhs = item.dotted.rule.lhs
            for active in c.active_at.get((lhs, item.origin), ()):
                add(
                    EarleyItem(active.origin, active.dotted.advance(), item.end),
                    EarleyJustification("complete", (active, item), None),
                )
        elif goal in nonterminals:
            for rule in g.rules_for(goal):
                add(
                    EarleyItem(item.end, DottedRule(rule, 0), item.end),
                    EarleyJustification("predict", (item,), None),
                )
            for done in c.completed_at.get((goal, item.end), ()):
                add(
                    EarleyItem(item.origin, item.dotted.advance(), done.end),
                    EarleyJustification("complete", (item, done), None),
                )
        else:
            if item.end < n and tokens[item.end] == goal:
                add(
                    EarleyItem(item.origin, item.dotted.advance(), item.end + 1),
                    EarleyJustification("scan", (item,), goal),
                )
    return c


def earley_recognized(c: EarleyChart) -> bool:
    return c.final_item() in c.items


def earley_ambiguous_final(c: EarleyChart) -> int:
    """How many completions derive the final item; 0 when unrecognized,
    more than 1 signals ambiguity detected without building any forest."""
    return sum(
        1
        for j in c.justifications.get(c.final_item(), ())
        if j.tag == "complete"
    )


def dump_matrix(c: EarleyChart) -> str:
    cells: dict[tuple[int, int], list[str]] = defaultdict(list)
    for item in c.items:
        cells[(item.origin, item.end)].append(str(item.dotted))
    lines = []
    for j, i in sorted(cells):
        lines.append(f"T[{j},{i}]: " + ", ".join(sorted(cells[(j, i)])))
    return "\n".join(lines)

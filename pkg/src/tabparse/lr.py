"""Shift-reduce automata and their stack machines.

States are sets of dotted rules.  The compiled machine keeps one state per
stack cell; shifting reads a token and pushes the successor state, and a
reduction pops one cell per right-hand-side symbol before pushing the goto
of the uncovered state.  Reductions pop unboundedly many cells, so they are
kept as lazy descriptors (state, rule) and instantiated against a concrete
stack or table on demand; `binarize_reductions` rewrites them into bounded
transitions for engines that want none of that laziness.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .grammar import Grammar, GrammarError, Rule, has_epsilon_rules
from .pda import Marker, Pda, Transition
from .strategies import DottedRule

FINAL = Marker("q_final")


class LrState(NamedTuple):
    id: int
    items: frozenset[DottedRule]

    def __str__(self) -> str:
        return f"q{self.id}"

    def __repr__(self) -> str:
        return f"q{self.id}"


class LrAutomaton:
    def __init__(self, grammar: Grammar, states, goto_map):
        self.grammar = grammar
        self.states: tuple[LrState, ...] = tuple(states)
        # (state id, symbol) -> state id
        self.goto_map: dict[tuple[int, str], int] = dict(goto_map)

    def goto_state(self, state, symbol) -> Optional[LrState]:
        """Successor state, or None when undefined or `state` is no state."""
        if not isinstance(state, LrState):
            return None
        target = self.goto_map.get((state.id, symbol))
        return None if target is None else self.states[target]


class Reduction(NamedTuple):
    """Lazy stand-in for the pop-heavy transitions of a completed rule."""

    state: LrState
    rule: Rule

    def __str__(self) -> str:
        return f"{self.state} , {self.rule}"


class AuxSymbol(NamedTuple):
    """Intermediate stack symbol of a binarized reduction: `remaining` more
    right-hand-side cells are still to be popped for `rule`."""

    rule: Rule
    remaining: int

    def __str__(self) -> str:
        return f"[{self.rule}; {self.remaining}]"


def closure(g: Grammar, items: frozenset[DottedRule]) -> frozenset[DottedRule]:
    out = set(items)
    agenda = list(items)
    while agenda:
        d = agenda.pop()
        goal = d.goal
        if goal is None or goal not in g.nonterminals:
            continue
        for rule in g.rules_for(goal):
            fresh = DottedRule(rule, 0)
            if fresh not in out:
                out.add(fresh)
                agenda.append(fresh)
    return frozenset(out)


def goto(g: Grammar, items: frozenset[DottedRule], symbol: str) -> frozenset[DottedRule]:
    kernel = {d.advance() for d in items if d.goal == symbol}
    if not kernel:
        return frozenset()
    return closure(g, frozenset(kernel))


def _symbol_order(g: Grammar) -> list[str]:
    seen: dict[str, None] = {}
    for rule in g.rules:
        for sym in (rule.lhs, *rule.rhs):
            seen.setdefault(sym)
    return list(seen)


def build_lr_automaton(g: Grammar) -> LrAutomaton:
    """Deterministic construction: breadth-first from the start closure,
    state ids by discovery, symbols tried in first-occurrence order."""
    if has_epsilon_rules(g):
        raise GrammarError("shift-reduce compilation does not support empty rules")
    order = _symbol_order(g)
    init = closure(g, frozenset(DottedRule(r, 0) for r in g.start_rules()))
    ids: dict[frozenset[DottedRule], int] = {init: 0}
    states = [LrState(0, init)]
    goto_map: dict[tuple[int, str], int] = {}
    queue = [states[0]]
    while queue:
        state = queue.pop(0)
        for sym in order:
            target = goto(g, state.items, sym)
            if not target:
                continue
            if target not in ids:
                ids[target] = len(states)
                fresh = LrState(len(states), target)
                states.append(fresh)
                queue.append(fresh)
            goto_map[(state.id, sym)] = ids[target]
    return LrAutomaton(g, states, goto_map)


def compile_lr(g: Grammar) -> Pda:
    auto = build_lr_automaton(g)
    terminals = g.terminals
    order = _symbol_order(g)
    transitions = []
    for state in auto.states:
        for sym in order:
            if sym not in terminals:
                continue
            target = auto.goto_state(state, sym)
            if target is not None:
                transitions.append(Transition((state,), (sym,), (state, target)))
    reductions = []
    for state in auto.states:
        for rule in g.rules:
            if DottedRule(rule, len(rule.rhs)) in state.items:
                reductions.append(Reduction(state, rule))
    return Pda(
        input_alphabet=frozenset(terminals),
        stack_symbols=frozenset(auto.states) | {FINAL},
        initial=auto.states[0],
        final=FINAL,
        transitions=tuple(transitions),
        reductions=tuple(reductions),
        automaton=auto,
        grammar=g,
        kind="lr",
    )


def binarize_reductions(p: Pda) -> Pda:
    """Expand lazy reductions into transitions popping at most two cells.

    A reduction of A -> X1 .. Xm from state q_m pops m cells and pushes
    goto(q0, A) where q0 is the state left uncovered.  The expansion pops
    the cells one at a time, threading an auxiliary symbol that records the
    rule and the number of cells still owed; the states that may legally
    appear at each chain position are precomputed by walking the goto map
    backwards, so no spurious transition is ever emitted.
    """
    auto: LrAutomaton = p.automaton
    if auto is None or p.grammar is None:
        raise ValueError("can only binarize a machine built by the shift-reduce compiler")
    g = p.grammar
    transitions = list(p.transitions)
    seen = set(transitions)
    symbols = set(p.stack_symbols)

    def emit(t: Transition) -> None:
        if t not in seen:
            seen.add(t)
            transitions.append(t)
            symbols.update(t.pop)
            symbols.update(t.push)

    for red in p.reductions:
        rhs = red.rule.rhs
        m = len(rhs)
        # possible[k]: states allowed at chain position k (position m is the
        # reduction's own state, position 0 the uncovered one).
        possible = [set() for _ in range(m + 1)]
        possible[m] = {red.state}
        for k in range(m - 1, -1, -1):
            possible[k] = {
                q
                for q in auto.states
                if auto.goto_state(q, rhs[k]) in possible[k + 1]
            }

        def finishers(pop_top):
            for q0 in sorted(possible[0], key=lambda s: s.id):
                target = auto.goto_state(q0, red.rule.lhs)
                if target is not None:
                    emit(Transition((q0, pop_top), (), (q0, target)))
                if q0 == p.initial and red.rule.lhs == g.start:
                    emit(Transition((q0, pop_top), (), (p.final,)))

        if m == 1:
            finishers(red.state)
            continue
        aux = lambda k: AuxSymbol(red.rule, k)
        for q in sorted(possible[m - 1], key=lambda s: s.id):
            emit(Transition((q, red.state), (), (aux(m - 2),)))
        for k in range(m - 2, 0, -1):
            for q in sorted(possible[k], key=lambda s: s.id):
                emit(Transition((q, aux(k)), (), (aux(k - 1),)))
        finishers(aux(0))

    return Pda(
        input_alphabet=p.input_alphabet,
        stack_symbols=frozenset(symbols),
        initial=p.initial,
        final=p.final,
        transitions=tuple(transitions),
        reductions=(),
        automaton=auto,
        grammar=g,
        kind="lr-binarized",
    )


def dump_automaton(auto: LrAutomaton) -> str:
    g = auto.grammar
    rule_pos = {rule: i for i, rule in enumerate(g.rules)}
    lines = []
    for state in auto.states:
        lines.append(f"state {state.id}:")
        for d in sorted(state.items, key=lambda d: (rule_pos[d.rule], d.dot)):
            lines.append(f"  {d}")
    order = _symbol_order(g)
    for state in auto.states:
        for sym in order:
            target = auto.goto_map.get((state.id, sym))
            if target is not None:
                lines.append(f"goto({state.id}, {sym}) = {target}")
    return "\n".join(lines)

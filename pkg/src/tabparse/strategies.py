"""Compile grammars into stack machines.

Two classic strategies.  The goal-driven one keeps dotted rules on the stack
and expands the topmost goal before reading; the data-driven one shifts
phrase labels and replaces completed right-hand sides.  Both produce plain
machines that the simulator and the table engine consume without knowing
which strategy built them.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .grammar import Grammar, GrammarError, Rule, is_cnf
from .pda import Marker, Pda, Transition


class DottedRule(NamedTuple):
    """A rule with a progress marker: A -> alpha . beta."""

    rule: Rule
    dot: int

    def __str__(self) -> str:
        parts = [self.rule.lhs, "->"]
        parts += self.rule.rhs[: self.dot]
        parts.append(".")
        parts += self.rule.rhs[self.dot :]
        return " ".join(parts)

    @property
    def goal(self) -> Optional[str]:
        """The symbol right of the dot, None when complete."""
        if self.dot < len(self.rule.rhs):
            return self.rule.rhs[self.dot]
        return None

    @property
    def is_complete(self) -> bool:
        return self.dot == len(self.rule.rhs)

    def advance(self) -> "DottedRule":
        if self.is_complete:
            raise ValueError(f"cannot advance past the end of {self}")
        return DottedRule(self.rule, self.dot + 1)


def dotted_rules(g: Grammar):
    for rule in g.rules:
        for dot in range(len(rule.rhs) + 1):
            yield DottedRule(rule, dot)


def compile_topdown(g: Grammar) -> Pda:
    """Goal-driven machine over dotted rules.

    The topmost stack symbol is the rule instance being worked on.  A
    nonterminal goal is expanded by pushing a fresh dotted rule on top
    (keeping the parent), a terminal goal is read off the input, and a
    completed rule is popped together with its parent, advancing the parent
    over the goal it predicted.
    """
    starts = g.start_rules()
    if len(starts) != 1:
        raise GrammarError(
            f"goal-driven compilation needs a single {g.start} rule; "
            "augment the grammar first"
        )
    start_rule = starts[0]
    symbols = frozenset(dotted_rules(g))
    transitions = []
    for d in dotted_rules(g):
        goal = d.goal
        if goal is not None and goal in g.nonterminals:
            for sub in g.rules_for(goal):
                transitions.append(
                    Transition((d,), (), (d, DottedRule(sub, 0)))
                )
    for d in dotted_rules(g):
        goal = d.goal
        if goal is not None and goal in g.terminals:
            transitions.append(Transition((d,), (goal,), (d.advance(),)))
    for d in dotted_rules(g):
        goal = d.goal
        if goal is not None and goal in g.nonterminals:
            for sub in g.rules_for(goal):
                done = DottedRule(sub, len(sub.rhs))
                transitions.append(Transition((d, done), (), (d.advance(),)))
    return Pda(
        input_alphabet=frozenset(g.terminals),
        stack_symbols=symbols,
        initial=DottedRule(start_rule, 0),
        final=DottedRule(start_rule, len(start_rule.rhs)),
        transitions=tuple(transitions),
        grammar=g,
        kind="topdown",
    )


def compile_bottomup(g: Grammar) -> Pda:
    """Data-driven machine for grammars in Chomsky normal form.

    Stack symbols are the nonterminals themselves.  Reading a token pushes
    the label of a matching lexical rule without popping anything; a binary
    rule replaces its two children on top of the stack by its left-hand
    side.  The start symbol sits on an imaginary bottom marker that nothing
    ever pops.
    """
    if not is_cnf(g):
        raise GrammarError("data-driven compilation needs Chomsky normal form")
    bottom = Marker("bot^")
    transitions = []
    for rule in g.rules:
        if len(rule.rhs) == 1:
            transitions.append(Transition((), (rule.rhs[0],), (rule.lhs,)))
    for rule in g.rules:
        if len(rule.rhs) == 2:
            transitions.append(Transition(tuple(rule.rhs), (), (rule.lhs,)))
    return Pda(
        input_alphabet=frozenset(g.terminals),
        stack_symbols=frozenset(g.nonterminals) | {bottom},
        initial=bottom,
        final=g.start,
        transitions=tuple(transitions),
        grammar=g,
        bottom_marker_start=True,
        kind="bottomup",
    )

"""Pushdown automata with stack-suffix rewriting transitions.

A transition (pop, read, push) applies to a configuration when ``pop`` is a
suffix of the stack and ``read`` is the next stretch of input; it replaces
that suffix with ``push`` and advances past the read tokens.  No separate
finite control: all state lives on the stack.  Recognition is reaching a
designated final stack from the initial one after consuming the whole input.

Stack symbols are opaque hashable values.  Grammar compilers push dotted
rules or automaton states; what matters here is only equality and str().
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional


class Marker:
    """Display-only stack symbol (bottom markers and the like).

    Markers compare equal by name but never equal a plain string, so a marker
    cannot collide with a grammar symbol spelled the same way.
    """

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name

    def __str__(self) -> str:
        return self.name

    def __eq__(self, other):
        return isinstance(other, Marker) and other.name == self.name

    def __hash__(self):
        return hash((Marker, self.name))


class Transition(NamedTuple):
    pop: tuple
    read: tuple[str, ...]
    push: tuple

    def __str__(self) -> str:
        return f"{_seq(self.pop)} , {_seq(self.read)} , {_seq(self.push)}"


class Configuration(NamedTuple):
    stack: tuple
    position: int

    def __str__(self) -> str:
        return f"{_seq(self.stack)} | {self.position}"


class Run(NamedTuple):
    """An accepting derivation, reported as the configuration sequence."""

    steps: tuple[Configuration, ...]


def render_symbol(s) -> str:
    """Compound stack symbols (dotted rules and the like) render with
    spaces; parenthesize those so symbol sequences stay readable."""
    text = str(s)
    return f"({text})" if " " in text else text


def _seq(symbols) -> str:
    return " ".join(render_symbol(s) for s in symbols) if symbols else "eps"


@dataclass(frozen=True)
class Pda:
    input_alphabet: frozenset
    stack_symbols: frozenset
    initial: Any
    final: Any
    transitions: tuple[Transition, ...]
    # Lazily expanded reductions for shift-reduce automata: the table engine
    # and the simulator instantiate their multi-pop transitions on demand
    # instead of materializing every goto-consistent state chain.
    reductions: tuple = ()
    automaton: Any = field(default=None, compare=False)
    # Grammar this machine was compiled from, when there is one.  Needed to
    # turn charts back into grammar trees.
    grammar: Any = field(default=None, compare=False)
    # When set, the initial symbol is an imaginary bottom marker that no
    # transition pops, and acceptance means the stack is exactly
    # (initial, final) rather than (final,).
    bottom_marker_start: bool = False
    # Which compiler produced this machine ("topdown", "bottomup", "lr",
    # "lr-binarized") or "pda" for hand-built ones.  Chart-to-tree editing
    # dispatches on it.
    kind: str = "pda"

    def __post_init__(self):
        for sym in (self.initial, self.final):
            if sym not in self.stack_symbols:
                raise ValueError(f"{sym} is not a stack symbol")
        for t in self.transitions:
            for sym in tuple(t.pop) + tuple(t.push):
                if sym not in self.stack_symbols:
                    raise ValueError(f"transition {t}: unknown stack symbol {sym}")
            for a in t.read:
                if a not in self.input_alphabet:
                    raise ValueError(f"transition {t}: unknown input symbol {a}")

    def accept_stack(self) -> tuple:
        if self.bottom_marker_start:
            return (self.initial, self.final)
        return (self.final,)


def pda_size(p: Pda) -> int:
    """Sum over transitions of |pop| + |read| + |push|."""
    return sum(len(t.pop) + len(t.read) + len(t.push) for t in p.transitions)


def applicable(t: Transition, c: Configuration, tokens) -> Optional[Configuration]:
    """The successor configuration, or None when the transition doesn't apply."""
    k = len(t.pop)
    if k and tuple(c.stack[-k:]) != tuple(t.pop):
        return None
    m = len(t.read)
    if tuple(tokens[c.position : c.position + m]) != tuple(t.read):
        return None
    return Configuration(c.stack[: len(c.stack) - k] + tuple(t.push), c.position + m)


@dataclass
class SimulationResult:
    verdict: str  # "yes" | "no" | "bound-exceeded"
    runs: tuple[Run, ...]


def simulate(
    p: Pda,
    tokens,
    *,
    max_steps: int = 1_000_000,
    max_stack_depth: int | None = None,
    max_runs: int = 64,
) -> SimulationResult:
    """Depth-first search over the successor relation, transitions tried in
    declaration order.

    Runs never revisit a configuration already on the current branch (a run
    that did would contain a removable loop) and end at the first accepting
    configuration reached on a branch.  Verdict is "yes" as soon as one
    accepting run exists within the bounds, "no" when the search space was
    exhausted without truncation, "bound-exceeded" otherwise.
    """
    tokens = tuple(tokens)
    n = len(tokens)
    if max_stack_depth is None:
        max_stack_depth = 4 * (n + 1) * len(p.stack_symbols) + 8
    accept = p.accept_stack()
    runs: list[Run] = []
    steps = 0
    truncated = False
    start = Configuration((p.initial,), 0)
    path = [start]
    on_path = {start}

    def successors(c: Configuration):
        for t in p.transitions:
            nxt = applicable(t, c, tokens)
            if nxt is not None:
                yield nxt
        for nxt in _reduction_successors(p, c):
            yield nxt

    def dfs() -> None:
        nonlocal steps, truncated
        if truncated and len(runs) >= max_runs:
            return
        c = path[-1]
        if c.stack == accept and c.position == n:
            runs.append(Run(tuple(path)))
            if len(runs) >= max_runs:
                truncated = True
            return
        for nxt in successors(c):
            if steps >= max_steps:
                truncated = True
                return
            steps += 1
            if nxt in on_path:
                continue
            if len(nxt.stack) > max_stack_depth:
                truncated = True
                continue
            path.append(nxt)
            on_path.add(nxt)
            dfs()
            on_path.discard(nxt)
            path.pop()
            if truncated and len(runs) >= max_runs:
                return

    dfs()
    if runs:
        verdict = "yes"
    elif truncated:
        verdict = "bound-exceeded"
    else:
        verdict = "no"
    return SimulationResult(verdict, tuple(runs))


def _reduction_successors(p: Pda, c: Configuration):
    """Instantiate lazy reductions against the current stack."""
    for red in p.reductions:
        m = len(red.rule.rhs)
        stack = c.stack
        if len(stack) < m + 1 or stack[-1] != red.state:
            continue
        chain = stack[-(m + 1) :]
        auto = p.automaton
        if any(
            auto.goto_state(chain[i], red.rule.rhs[i]) != chain[i + 1]
            for i in range(m)
        ):
            continue
        target = auto.goto_state(chain[0], red.rule.lhs)
        if target is not None:
            yield Configuration(stack[: -(m + 1)] + (chain[0], target), c.position)
        if (
            len(stack) == m + 1
            and chain[0] == p.initial
            and p.grammar is not None
            and red.rule.lhs == p.grammar.start
        ):
            yield Configuration((p.final,), c.position)


def dump_pda(p: Pda) -> str:
    lines = [f"init: {render_symbol(p.initial)}", f"final: {render_symbol(p.final)}"]
    lines.extend(str(t) for t in p.transitions)
    for red in p.reductions:
        lines.append(f"reduce: {red.state} , {red.rule}")
    return "\n".join(lines)


def dump_run(r: Run) -> str:
    return "\n".join(str(c) for c in r.steps)

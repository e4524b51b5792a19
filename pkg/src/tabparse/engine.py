"""Table-driven recognition for stack machines.

Instead of simulating stacks one at a time, the engine derives *items*
(lower, j, upper, i): somewhere in the search space there is a reachable
configuration whose stack has `upper` directly above `lower`, where `lower`
was on top after reading j tokens and `upper` on top after reading i.  The
items of all reachable stacks form a graph over (position, symbol) vertices
that shares common stack suffixes, so the table stays polynomial while the
set of stacks it represents may be exponential or infinite.

Matching is symmetric: whenever an item is taken off the agenda it is tried
in every antecedent slot of every inference rule, with partners looked up in
the table.  That makes the engine insensitive to agenda order and spares it
any special-casing for empty input or cyclic machines.

Each derived item records how it was inferred (rule tag, antecedent items,
transition).  These justifications are what parse forests are built from.
"""

from __future__ import annotations

from collections import defaultdict, deque
from typing import Any, NamedTuple, Optional

from .pda import Marker, Pda, Transition, render_symbol

BOTTOM = Marker("bot")


class UnsupportedTransition(ValueError):
    """The transition falls outside the family the table rules cover."""


class Item(NamedTuple):
    lower: Any
    lower_pos: int
    upper: Any
    upper_pos: int

    def __str__(self) -> str:
        return (
            f"( {render_symbol(self.lower)} , {self.lower_pos} , "
            f"{render_symbol(self.upper)} , {self.upper_pos} )"
        )


class Justification(NamedTuple):
    """One way an item was inferred."""

    tag: str
    antecedents: tuple[Item, ...]
    via: Any  # Transition, reduction descriptor, or None for the axiom


class Chart:
    def __init__(self, pda: Pda, tokens):
        self.pda = pda
        self.tokens = tuple(tokens)
        self.items: set[Item] = set()
        self.justifications: dict[Item, list[Justification]] = {}
        self.by_upper_at: dict[tuple[Any, int], list[Item]] = defaultdict(list)
        self.by_lower_at: dict[tuple[Any, int], list[Item]] = defaultdict(list)
        self.fired = 0
        self._seen: set[tuple[Item, Justification]] = set()

    def accept_item(self) -> Item:
        n = len(self.tokens)
        if self.pda.bottom_marker_start:
            return Item(self.pda.initial, 0, self.pda.final, n)
        return Item(BOTTOM, 0, self.pda.final, n)


def recognized(c: Chart) -> bool:
    return c.accept_item() in c.items


def classify_transition(t: Transition) -> str:
    """Sort a transition into the supported families F1..F7.

    F1 push-read, F2 swap-read, F3 pop, F4 push, F5 swap, F6 read-push
    (pops nothing), F7 multi-pop.  Swaps and pops may either keep the symbol
    below the top ("full" forms popping it and pushing it back) or not
    mention it at all (bare forms).  Anything else is rejected.
    """
    np, nr, nu = len(t.pop), len(t.read), len(t.push)
    if nr > 1:
        raise UnsupportedTransition(f"{t}: reads more than one token")
    if nr == 1:
        if np == 0 and nu == 1:
            return "F6"
        if np == 1 and nu == 2 and t.push[0] == t.pop[0]:
            return "F1"
        if np == 1 and nu == 1:
            return "F2"
        if np == 2 and nu == 2 and t.push[0] == t.pop[0]:
            return "F2"
    else:
        if np == 1 and nu == 2 and t.push[0] == t.pop[0]:
            return "F4"
        if np == 1 and nu == 1:
            return "F5"
        if np == 2 and nu == 2 and t.push[0] == t.pop[0]:
            return "F5"
        if np == 2 and nu == 1:
            return "F3"
        if np >= 3 and nu == 2 and t.push[0] == t.pop[0]:
            return "F7"
        if np >= 3 and nu == 1:
            return "F7"
    raise UnsupportedTransition(f"{t}: unsupported shape")


def _literal_chains(c: Chart, item: Item, t: Transition):
    """Antecedent tuples of a multi-pop transition that involve `item`.

    The popped symbols q0..qm must appear as a linked path of table arcs;
    when the transition pushes a single symbol the consequent also needs the
    arc below q0, whose lower end it inherits.
    """
    pop = t.pop
    m = len(pop) - 1
    single = len(t.push) == 1
    lo = 0 if single else 1
    fits = []
    if single and item.upper == pop[0]:
        fits.append(0)
    for k in range(1, m + 1):
        if item.lower == pop[k - 1] and item.upper == pop[k]:
            fits.append(k)
    for k in fits:
        partials = [[item]]
        for k2 in range(k + 1, m + 1):
            partials = [
                ch + [nxt]
                for ch in partials
                for nxt in c.by_lower_at.get((ch[-1].upper, ch[-1].upper_pos), ())
                if nxt.upper == pop[k2]
            ]
        for k2 in range(k - 1, lo - 1, -1):
            partials = [
                [prev] + ch
                for ch in partials
                for prev in c.by_upper_at.get((ch[0].lower, ch[0].lower_pos), ())
                if k2 == 0 or prev.lower == pop[k2 - 1]
            ]
        yield from (tuple(ch) for ch in partials)


def reduction_expand(c: Chart, item: Item, red) -> list[tuple[Item, Justification]]:
    """Inferences a lazy reduction enables once `item` is in the table.

    The popped cells of a reduction form a path of arcs between automaton
    states; paths are recovered by walking arc linkage.  Derivable paths
    ending in the reduction's state are automatically goto-consistent (each
    arc into a state whose dot sits after the k-th right-hand-side symbol is
    a goto edge over that symbol), which is asserted rather than filtered.
    """
    auto = c.pda.automaton
    rhs = red.rule.rhs
    m = len(rhs)
    out: list[tuple[Item, Justification]] = []
    if item.lower == BOTTOM:
        return out
    fits = [
        k
        for k in range(1, m + 1)
        if auto.goto_state(item.lower, rhs[k - 1]) == item.upper
        and (k < m or item.upper == red.state)
    ]
    chains = []
    for k in fits:
        partials = [[item]]
        for k2 in range(k + 1, m + 1):
            partials = [
                ch + [nxt]
                for ch in partials
                for nxt in c.by_lower_at.get((ch[-1].upper, ch[-1].upper_pos), ())
                if nxt.lower != BOTTOM and (k2 < m or nxt.upper == red.state)
            ]
        for _ in range(k - 1, 0, -1):
            partials = [
                [prev] + ch
                for ch in partials
                for prev in c.by_upper_at.get((ch[0].lower, ch[0].lower_pos), ())
                if prev.lower != BOTTOM
            ]
        chains.extend(tuple(ch) for ch in partials)
    for chain in chains:
        states = [chain[0].lower] + [arc.upper for arc in chain]
        assert all(
            auto.goto_state(states[i], rhs[i]) == states[i + 1] for i in range(m)
        ), f"inconsistent reduction path for {red.rule}"
        q0 = states[0]
        start_pos = chain[0].lower_pos
        end_pos = chain[-1].upper_pos
        target = auto.goto_state(q0, red.rule.lhs)
        if target is not None:
            out.append(
                (
                    Item(q0, start_pos, target, end_pos),
                    Justification("reduce", chain, red),
                )
            )
        if q0 == c.pda.initial and red.rule.lhs == c.pda.grammar.start:
            for below in c.by_upper_at.get((q0, start_pos), ()):
                if below.lower == BOTTOM:
                    out.append(
                        (
                            Item(BOTTOM, below.lower_pos, c.pda.final, end_pos),
                            Justification("accept", (below,) + chain, red),
                        )
                    )
    return out


def run_tabular(p: Pda, tokens, agenda_order: str = "lifo") -> Chart:
    """Saturate the table of items for `p` on `tokens`.

    The result is independent of `agenda_order` ("lifo" or "fifo"); the
    knob exists to let tests check exactly that.
    """
    if agenda_order not in ("lifo", "fifo"):
        raise ValueError(f"unknown agenda order {agenda_order!r}")
    tokens = tuple(tokens)
    n = len(tokens)
    c = Chart(p, tokens)

    # Index transitions by the trigger field of their antecedent.
    f1 = defaultdict(list)  # upper -> (token, pushed, t)
    f2_full = defaultdict(list)  # (lower, upper) -> (token, replacement, t)
    f2_bare = defaultdict(list)  # upper -> (token, replacement, t)
    f3 = defaultdict(list)  # popped pair -> (q1, q2, q3, t), both slots below
    f3_first = defaultdict(list)  # upper == q1
    f4 = defaultdict(list)  # upper -> (pushed, t)
    f5_full = defaultdict(list)
    f5_bare = defaultdict(list)
    f6 = []  # (token, pushed, t)
    f7 = []  # literal multi-pop transitions
    for t in p.transitions:
        shape = classify_transition(t)
        if shape == "F1":
            f1[t.pop[0]].append((t.read[0], t.push[1], t))
        elif shape == "F2":
            if len(t.pop) == 2:
                f2_full[(t.pop[0], t.pop[1])].append((t.read[0], t.push[1], t))
            else:
                f2_bare[t.pop[0]].append((t.read[0], t.push[0], t))
        elif shape == "F3":
            q1, q2 = t.pop
            f3[(q1, q2)].append((q1, q2, t.push[0], t))
            f3_first[q1].append((q1, q2, t.push[0], t))
        elif shape == "F4":
            f4[t.pop[0]].append((t.push[1], t))
        elif shape == "F5":
            if len(t.pop) == 2:
                f5_full[(t.pop[0], t.pop[1])].append((t.push[1], t))
            else:
                f5_bare[t.pop[0]].append((t.push[0], t))
        elif shape == "F6":
            f6.append((t.read[0], t.push[0], t))
        else:
            f7.append(t)

    agenda: deque[Item] = deque()

    def add(item: Item, just: Justification) -> None:
        c.fired += 1
        key = (item, just)
        if key in c._seen:
            return
        c._seen.add(key)
        c.justifications.setdefault(item, []).append(just)
        if item not in c.items:
            c.items.add(item)
            c.by_upper_at[(item.upper, item.upper_pos)].append(item)
            c.by_lower_at[(item.lower, item.lower_pos)].append(item)
            agenda.append(item)

    add(Item(BOTTOM, 0, p.initial, 0), Justification("axiom", (), None))

    while agenda:
        item = agenda.pop() if agenda_order == "lifo" else agenda.popleft()
        low, j, up, i = item
        tok = tokens[i] if i < n else None

        if tok is not None:
            for a, pushed, t in f1.get(up, ()):
                if a == tok:
                    add(Item(up, i, pushed, i + 1), Justification("F1", (item,), t))
            for a, repl, t in f2_full.get((low, up), ()):
                if a == tok:
                    add(Item(low, j, repl, i + 1), Justification("F2", (item,), t))
            for a, repl, t in f2_bare.get(up, ()):
                if a == tok:
                    add(Item(low, j, repl, i + 1), Justification("F2", (item,), t))
            for a, pushed, t in f6:
                if a == tok:
                    # Positional: any arc ending at i witnesses the push.
                    add(Item(up, i, pushed, i + 1), Justification("F6", (), t))

        for pushed, t in f4.get(up, ()):
            add(Item(up, i, pushed, i), Justification("F4", (item,), t))
        for repl, t in f5_full.get((low, up), ()):
            add(Item(low, j, repl, i), Justification("F5", (item,), t))
        for repl, t in f5_bare.get(up, ()):
            add(Item(low, j, repl, i), Justification("F5", (item,), t))

        # Pops need a partner: `item` can be the popped pair itself or the
        # arc beneath it.
        for q1, q2, q3, t in f3.get((low, up), ()):
            for below in c.by_upper_at.get((q1, j), ()):
                add(
                    Item(below.lower, below.lower_pos, q3, i),
                    Justification("F3", (below, item), t),
                )
        for q1, q2, q3, t in f3_first.get(up, ()):
            for pair in c.by_lower_at.get((up, i), ()):
                if pair.upper == q2:
                    add(
                        Item(low, j, q3, pair.upper_pos),
                        Justification("F3", (item, pair), t),
                    )

        for t in f7:
            single = len(t.push) == 1
            for chain in _literal_chains(c, item, t):
                if single:
                    below, *rest = chain
                    add(
                        Item(below.lower, below.lower_pos, t.push[0], rest[-1].upper_pos),
                        Justification("F7", chain, t),
                    )
                else:
                    add(
                        Item(
                            t.pop[0],
                            chain[0].lower_pos,
                            t.push[1],
                            chain[-1].upper_pos,
                        ),
                        Justification("F7", chain, t),
                    )

        for red in p.reductions:
            for consequent, just in reduction_expand(c, item, red):
                add(consequent, just)

    return c


def dump_chart(c: Chart) -> str:
    order = sorted(
        c.items,
        key=lambda it: (
            it.upper_pos,
            it.lower_pos,
            str(it.upper),
            str(it.lower),
        ),
    )
    return "\n".join(str(it) for it in order)


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def chart_to_dot(c: Chart) -> str:
    """The item graph in dot format: a vertex per (position, symbol), one
    edge per item pointing from its upper end down to its lower end,
    vertices clustered by position."""
    import re

    names: dict[tuple[int, Any], str] = {}
    used: set[str] = set()

    def node(pos: int, sym) -> str:
        key = (pos, sym)
        if key not in names:
            base = f"p{pos}_" + re.sub(r"[^0-9A-Za-z_]", "_", str(sym))
            name = base
            k = 2
            while name in used:
                name = f"{base}_{k}"
                k += 1
            names[key] = name
            used.add(name)
        return names[key]

    arcs = sorted(
        c.items,
        key=lambda it: (it.upper_pos, it.lower_pos, str(it.upper), str(it.lower)),
    )
    vertices = defaultdict(set)
    for it in arcs:
        vertices[it.lower_pos].add(it.lower)
        vertices[it.upper_pos].add(it.upper)
    lines = ["digraph chart {"]
    for pos in sorted(vertices):
        lines.append(f"  subgraph cluster_{pos} {{")
        lines.append(f'    label="{pos}";')
        for sym in sorted(vertices[pos], key=str):
            lines.append(f'    {node(pos, sym)} [label="{_dot_escape(str(sym))}"];')
        lines.append("  }")
    for it in arcs:
        lines.append(
            f"  {node(it.upper_pos, it.upper)} -> {node(it.lower_pos, it.lower)};"
        )
    lines.append("}")
    return "\n".join(lines)

import pytest

from tabparse.grammar import GrammarError, Rule, parse_grammar
from tabparse.lr import (
    FINAL,
    AuxSymbol,
    LrState,
    Reduction,
    binarize_reductions,
    build_lr_automaton,
    closure,
    compile_lr,
    dump_automaton,
)
from tabparse.pda import simulate
from tabparse.strategies import DottedRule


def dr(g, lhs, rhs, dot):
    return DottedRule(Rule(lhs, rhs), dot)


def test_closure_pulls_in_predictions(sps_grammar):
    g = sps_grammar
    start = frozenset({dr(g, "S", ("S", "+", "S"), 0)})
    clo = closure(g, start)
    assert clo == {
        dr(g, "S", ("S", "+", "S"), 0),
        dr(g, "S", ("a",), 0),
    }


def test_automaton_structure(sps_grammar):
    auto = build_lr_automaton(sps_grammar)
    items = [
        {d for d in s.items} for s in auto.states
    ]
    g = sps_grammar
    assert items == [
        {dr(g, "S", ("S", "+", "S"), 0), dr(g, "S", ("a",), 0)},
        {dr(g, "S", ("S", "+", "S"), 1)},
        {dr(g, "S", ("a",), 1)},
        {
            dr(g, "S", ("S", "+", "S"), 2),
            dr(g, "S", ("S", "+", "S"), 0),
            dr(g, "S", ("a",), 0),
        },
        {dr(g, "S", ("S", "+", "S"), 3), dr(g, "S", ("S", "+", "S"), 1)},
    ]
    assert auto.goto_map == {
        (0, "S"): 1,
        (0, "a"): 2,
        (1, "+"): 3,
        (3, "S"): 4,
        (3, "a"): 2,
        (4, "+"): 3,
    }


def test_goto_state_guards(sps_grammar):
    auto = build_lr_automaton(sps_grammar)
    assert auto.goto_state(auto.states[0], "S") is auto.states[1]
    assert auto.goto_state(auto.states[0], "+") is None
    # non-state stack symbols (bottom marker, aux cells) have no successors
    assert auto.goto_state(FINAL, "S") is None


def test_rejects_epsilon_rules():
    with pytest.raises(GrammarError, match="empty rules"):
        build_lr_automaton(parse_grammar("S -> a\nS ->"))


def test_compiled_machine(sps_grammar):
    p = compile_lr(sps_grammar)
    assert p.kind == "lr"
    assert p.final is FINAL
    assert len(p.transitions) == 4  # shifts only
    assert all(len(t.read) == 1 for t in p.transitions)
    reds = {(red.state.id, str(red.rule)) for red in p.reductions}
    assert reds == {(2, "S -> a"), (4, "S -> S + S")}


@pytest.mark.parametrize(
    "text, verdict",
    [
        ("a", "yes"),
        ("a + a", "yes"),
        ("a + a + a", "yes"),
        ("", "no"),
        ("a +", "no"),
        ("+ a", "no"),
        ("a a", "no"),
    ],
)
def test_simulation_with_lazy_reductions(sps_grammar, text, verdict):
    p = compile_lr(sps_grammar)
    assert simulate(p, text.split()).verdict == verdict


def test_binarized_machine(sps_grammar):
    p = binarize_reductions(compile_lr(sps_grammar))
    assert p.kind == "lr-binarized"
    assert p.reductions == ()
    assert len(p.transitions) == 13
    assert all(len(t.pop) <= 2 for t in p.transitions)
    assert any(isinstance(s, AuxSymbol) for s in p.stack_symbols)
    for text in ["a", "a + a", "a + a + a", "", "a +", "+ a", "a a"]:
        want = simulate(compile_lr(sps_grammar), text.split()).verdict
        assert simulate(p, text.split()).verdict == want


def test_binarize_requires_compiler_output(branching_pda):
    with pytest.raises(ValueError, match="shift-reduce"):
        binarize_reductions(branching_pda)


def test_minimal_grammar():
    p = compile_lr(parse_grammar("S -> a"))
    auto = p.automaton
    assert len(auto.states) == 2
    assert simulate(p, ["a"]).verdict == "yes"
    assert simulate(p, []).verdict == "no"
    assert simulate(p, ["a", "a"]).verdict == "no"


def test_expr_grammar_states(expr_grammar):
    auto = build_lr_automaton(expr_grammar)
    assert len(auto.states) == 7
    p = compile_lr(expr_grammar)
    for text, want in [("a", "yes"), ("a + a * a", "yes"), ("a *", "no")]:
        assert simulate(p, text.split()).verdict == want
        assert simulate(binarize_reductions(p), text.split()).verdict == want


def test_dump_automaton(sps_grammar):
    text = dump_automaton(build_lr_automaton(sps_grammar))
    lines = text.splitlines()
    assert lines[0] == "state 0:"
    assert lines[1] == "  S -> . S + S"
    assert lines[2] == "  S -> . a"
    assert "goto(0, S) = 1" in lines
    assert "goto(4, +) = 3" in lines
    assert sum(1 for l in lines if l.startswith("goto")) == 6


def test_state_str():
    s = LrState(3, frozenset())
    assert str(s) == "q3" and repr(s) == "q3"


def test_reduction_str(sps_grammar):
    p = compile_lr(sps_grammar)
    red = next(r for r in p.reductions if r.rule.rhs == ("a",))
    assert str(red) == "q2 , S -> a"


def test_larger_family_builds():
    # nested lists with two kinds of brackets; just exercise construction
    g = parse_grammar(
        "S -> L\n"
        "L -> ( L )\n"
        "L -> [ L ]\n"
        "L -> x\n"
        "L -> L L\n"
    )
    p = compile_lr(g)
    assert simulate(p, "( x )".split()).verdict == "yes"
    assert simulate(p, "( [ x ] x )".split()).verdict == "yes"
    assert simulate(p, "( x".split()).verdict == "no"
    b = binarize_reductions(p)
    assert simulate(b, "[ x ] ( x )".split()).verdict == "yes"

import pytest

from tabparse.grammar import parse_grammar
from tabparse.trees import (
    leaf,
    node,
    render_tree,
    tree_depth,
    tree_yield,
    validate_tree,
)

T = node("S", (node("A", (leaf("a"),)), node("B", (leaf("b"), leaf("c")))))


def test_render():
    assert render_tree(T) == "(S (A a) (B b c))"
    assert render_tree(leaf("x")) == "x"
    assert render_tree(node("A", ())) == "(A)"


def test_yield():
    assert tree_yield(T) == ("a", "b", "c")
    assert tree_yield(node("A", ())) == ()


def test_depth():
    assert tree_depth(leaf("x")) == 0
    assert tree_depth(T) == 2
    assert tree_depth(node("A", ())) == 1


def test_validate():
    g = parse_grammar("S -> A B\nA -> a\nB -> b c")
    good = node("S", (node("A", (leaf("a"),)), node("B", (leaf("b"), leaf("c")))))
    assert validate_tree(g, good)
    # wrong rule shape
    bad = node("S", (node("A", (leaf("a"),)),))
    assert not validate_tree(g, bad)
    # terminal used as an inner node
    assert not validate_tree(g, node("a", ()))


def test_validate_epsilon():
    g = parse_grammar("S -> A\nA ->")
    assert validate_tree(g, node("S", (node("A", ()),)))
    assert not validate_tree(g, node("S", ()))

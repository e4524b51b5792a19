"""
Matrix recognition and the shared parse forest
==============================================

For grammars in Chomsky normal form the chart degenerates to a boolean
matrix: T[j,i] holds the nonterminals deriving tokens j..i.  The chart
is more than a yes/no answer, though.  Read as a grammar over span
nodes, it is a parse forest: a compact encoding of every parse tree at
once, which we can prune, count, and sample without ever materializing
the whole (possibly infinite) set.
"""

import pathlib

from tabparse.cky import cky_parse, cky_recognized, dump_matrix
from tabparse.forest import (
    build_forest_cky,
    build_forest_items,
    count_trees,
    dump_forest,
    extract_trees,
    reduce_forest,
)
from tabparse.engine import run_tabular
from tabparse.grammar import augment_start, parse_grammar
from tabparse.strategies import compile_topdown
from tabparse.trees import render_tree, tree_yield

here = pathlib.Path(__file__).parent
grammar = parse_grammar((here / "grammars" / "cnf.cfg").read_text())
word = "aabb"

chart = cky_parse(grammar, word)
print("input:", word)
print("recognized:", cky_recognized(chart))
print()
print(dump_matrix(chart))

# The forest's rules are chart cells justified by grammar rules.
forest = build_forest_cky(chart)
print()
print(f"forest has {len(forest.rules)} rules:")
print(dump_forest(forest))

# Some rules never reach a full parse ((0, A, 4) spans the whole input
# but the start symbol is S).  Reduction removes them; dump_forest can
# mark what was dropped.
reduced = reduce_forest(forest)
dropped = len(forest.rules) - len(reduced.rules)
print()
print(f"reduction dropped {dropped} dead rules")

# Counting walks the forest bottom-up without enumerating trees.
counted = count_trees(reduced)
print("distinct parse trees:", "infinite" if counted.infinite else counted.value)

for tree in extract_trees(reduced, 10):
    print(" ", render_tree(tree), "->", " ".join(tree_yield(tree)))

# A cyclic grammar (S -> S) makes the forest cyclic and the tree count
# infinite.  Extraction still works: ask for k trees, get the k
# shallowest.
cyclic = augment_start(parse_grammar("S -> S\nS -> a"))
c = run_tabular(compile_topdown(cyclic), ["a"])
f = reduce_forest(build_forest_items(c))
print()
print("S -> S | a on input 'a'")
counted = count_trees(f)
print("count:", "infinite" if counted.infinite else counted.value)
for tree in extract_trees(f, 3):
    print(" ", render_tree(tree))

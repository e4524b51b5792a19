"""
Simulating a pushdown automaton directly
========================================

A machine here is a set of stack-rewriting transitions: pop a suffix off
the stack, optionally read an input symbol, push a replacement.  This
script builds a small nondeterministic machine by hand and runs the
naive depth-first simulator on it.
"""

from tabparse import Pda, Transition, dump_pda, dump_run, simulate

# The machine accepts exactly "a b c d", but it can do so in two ways:
# after reading "b" it guesses between pushing q2 and pushing q3, and the
# two branches only rejoin at the final state q9.
machine = Pda(
    input_alphabet=frozenset("abcd"),
    stack_symbols=frozenset(f"q{i}" for i in range(10)),
    initial="q0",
    final="q9",
    transitions=(
        Transition(("q0",), ("a",), ("q0", "q1")),
        Transition(("q0", "q1"), ("b",), ("q0", "q2")),
        Transition(("q0", "q1"), ("b",), ("q0", "q3")),
        Transition(("q2",), ("c",), ("q2", "q4")),
        Transition(("q3",), ("c",), ("q3", "q4")),
        Transition(("q4",), ("d",), ("q4", "q5")),
        Transition(("q4", "q5"), (), ("q6",)),
        Transition(("q2", "q6"), (), ("q7",)),
        Transition(("q0", "q7"), (), ("q9",)),
        Transition(("q3", "q6"), (), ("q8",)),
        Transition(("q0", "q8"), (), ("q9",)),
    ),
)

print(dump_pda(machine))
print()

# simulate() explores every run and returns all accepting ones
result = simulate(machine, "a b c d".split())
print(f"verdict: {result.verdict}, accepting runs: {len(result.runs)}")
for i, run in enumerate(result.runs):
    print(f"\nrun {i}: stack contents | input position")
    print(dump_run(run))

# A rejected input simply yields no accepting run.
print()
print("verdict on 'a b c':", simulate(machine, "a b c".split()).verdict)

# The simulator is bounded.  Give it too little rope and it reports
# "bound-exceeded" instead of an answer; that is the honest outcome for
# a blind search, and the reason the tabular engine exists (demo 02).
tight = simulate(machine, "a b c d".split(), max_steps=3)
print("with max_steps=3:", tight.verdict)

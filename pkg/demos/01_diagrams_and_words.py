"""Diagrams, generator words, and what happens when you stack them."""

from motzkin import evaluate, make_diagram, multiply, render, word_parse
from motzkin.diagram import beta, tau

n = 3
print("The generators of width 3, drawn top row over bottom row:\n")
for g in ("r1", "l1", "t1", "p2"):
    print(g)
    print(render(evaluate(word_parse(g, n))), "\n")

# stacking t1 on itself closes a loop, which the product counts
t1 = evaluate(word_parse("t1", n))
prod = multiply(t1, t1)
print("t1 * t1 leaves", prod.loops, "loop and is again t1:", prod.diagram == t1)

# a Motzkin diagram given by its edges
d = make_diagram(7, [("t1", "t3"), ("t4", "b1"), ("t5", "b2"), ("t6", "b7"), ("b3", "b6"), ("b4", "b5")])
print("\nA 7-vertex diagram:")
print(render(d))
print("live top vertices", sorted(tau(d)), "live bottom vertices", sorted(beta(d)))

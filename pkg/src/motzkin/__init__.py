"""Diagram monoids on two rows of vertices: Motzkin, Temperley-Lieb and planar rook."""

from .diagram import Diagram, Monoid, beta, identity, make_diagram, multiply, rank, render, tau
from .words import Word, evaluate, phi, word, word_parse, word_print

__all__ = [
    "Diagram", "Monoid", "beta", "identity", "make_diagram", "multiply", "rank", "render", "tau",
    "Word", "evaluate", "phi", "word", "word_parse", "word_print",
]

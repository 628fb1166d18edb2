"""Every valid parameter tuple of each macro for widths up to a bound."""

from __future__ import annotations

from motzkin.rewrite.tl import tl_words
from motzkin.words import Word


def t_elements(n: int, lo: int, hi: int) -> list[Word]:
    """One word per element of the sub-monoid generated by ``t_lo .. t_hi``."""
    gens = frozenset(range(lo, hi + 1)) if lo <= hi else frozenset()
    return [Word(n, w) for _, w in tl_words(n, gens)]


def hop(max_n: int):
    for n in range(2, max_n + 1):
        for i in range(1, n + 1):
            for k in range(i + 2, n + 1, 2):
                yield i, k, n


def slide(max_n: int):
    for n in range(2, max_n + 1):
        for i in range(1, n):
            for k in range(i + 1, n + 1):
                for T in t_elements(n, i + 1, k - 1):
                    yield (i, k), T


def burrow(max_n: int):
    for n in range(3, max_n + 1):
        for i in range(2, n):
            yield i, n


def wallslide(max_n: int):
    for n in range(2, max_n + 1):
        for i in range(1, n):
            for T in t_elements(n, 1, i - 2):
                for T2 in t_elements(n, i + 2, n - 1):
                    yield T, T2, i


def fuse(max_n: int):
    for n in range(2, max_n + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                d = i - j
                if d == 0:
                    continue
                case = {(True, True): 1, (False, True): 2, (False, False): 3, (True, False): 4}[(d > 0, d % 2 == 0)]
                yield case, i, j, n


def t_death(max_n: int):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for T in t_elements(n, k, n - 1):
                yield k, T, n

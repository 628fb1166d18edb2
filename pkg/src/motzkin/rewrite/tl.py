"""Certified reduction of Temperley-Lieb words to the Jones standard form.

Two phases: first remove every factor that is, up to commutation, ``t_i t_i``
or ``t_i t_{i+-1} t_i``; the surviving reduced word is commutation-equivalent
to the standard word, which is then reached by commutations alone.
"""

from __future__ import annotations

from functools import lru_cache

from ..diagram import Diagram, compose
from ..errors import RewriteMismatch
from ..structure import tl_standard_word
from ..words import GenSymbol, phi_letters, t
from .engine import Chain, RewriteTrace, reverse
from .moves import move


def _reducible(letters) -> tuple[int, int, int | None] | None:
    last: dict[int, int] = {}
    for b, g in enumerate(letters):
        a = last.get(g.index)
        if a is not None:
            nbrs = [c for c in range(a + 1, b) if abs(letters[c].index - g.index) == 1]
            if len(nbrs) <= 1:
                return a, b, (nbrs[0] if nbrs else None)
        last[g.index] = b
    return None


def tl_reduce(ch: Chain, lo: int, hi: int) -> int:
    """Reduce the all-t factor ``ch.letters[lo:hi]`` in place; returns its new end."""
    while True:
        found = _reducible(ch.letters[lo:hi])
        if found is None:
            return hi
        a, b, c = (x + lo if x is not None else None for x in found)
        g = ch.letters[a]
        if c is None:
            move(ch, a, b - 1)
            ch.step(b - 1, (g, g), (g,))
            hi -= 1
        else:
            move(ch, a, c - 1)
            move(ch, b, c + 1)
            mid = ch.letters[c]
            ch.step(c - 1, (g, mid, g), (g,))
            hi -= 2


def sort_to(ch: Chain, lo: int, target) -> None:
    """Reorder ``ch.letters[lo:lo+len(target)]`` into ``target`` using commutations."""
    for k, g in enumerate(target):
        pos = lo + k
        q = ch.letters.index(g, pos, lo + len(target))
        move(ch, q, pos)


def tl_normalize(ch: Chain, lo: int, hi: int) -> int:
    """Bring the t-factor at ``[lo, hi)`` to Jones standard form; returns its new end."""
    hi = tl_reduce(ch, lo, hi)
    factor = ch.letters[lo:hi]
    if any(g.kind != "t" for g in factor):
        raise RewriteMismatch("tl_normalize expects a factor over t letters")
    partner, _ = phi_letters(ch.n, factor)
    target = tl_standard_word(Diagram(ch.n, partner))[0].letters
    if len(target) != len(factor):
        raise RewriteMismatch("reduced word has the wrong length")
    sort_to(ch, lo, target)
    return hi


def tl_trace(n: int, letters) -> RewriteTrace:
    ch = Chain(n, letters)
    tl_normalize(ch, 0, len(ch.letters))
    return ch.trace()


def tl_equate(ch: Chain, lo: int, hi: int, target) -> int:
    """Rewrite the t-factor at ``[lo, hi)`` into the equal t-word ``target``; returns its new end."""
    target = tuple(target)
    ch.splice(tl_trace(ch.n, ch.letters[lo:hi]), lo)
    ch.splice(reverse(tl_trace(ch.n, target)), lo)
    return lo + len(target)


@lru_cache(maxsize=None)
def tl_words(n: int, gens: frozenset[int]) -> tuple[tuple[tuple[int, ...], tuple[GenSymbol, ...]], ...]:
    """A shortest word for every element of the sub-monoid generated by ``t_g``, ``g in gens``."""
    start = phi_letters(n, ())[0]
    seen = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for key in frontier:
            w = seen[key]
            for g in sorted(gens):
                w2 = w + (t(g),)
                k2 = phi_letters(n, w2)[0]
                if k2 not in seen:
                    seen[k2] = w2
                    nxt.append(k2)
        frontier = nxt
    return tuple(seen.items())


@lru_cache(maxsize=None)
def tl_factor(n: int, partner: tuple[int, ...], middle: tuple[GenSymbol, ...],
              left: frozenset[int], right: frozenset[int]):
    """Find t-words ``A`` over ``left`` and ``B`` over ``right`` with ``A middle B`` equal to ``partner``."""
    mid = phi_letters(n, middle)[0]
    best = None
    for kb, b in tl_words(n, right):
        tail = compose(n, mid, kb)[0]
        for ka, a in tl_words(n, left):
            if compose(n, ka, tail)[0] == partner:
                if best is None or len(a) + len(b) < len(best[0]) + len(best[1]):
                    best = (a, b)
                break
    return best

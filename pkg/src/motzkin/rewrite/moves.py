"""Small reusable edits on a Chain: swapping commuting letters and moving letters."""

from __future__ import annotations

from functools import lru_cache

from ..errors import RewriteMismatch
from ..words import GenSymbol, phi_letters
from .engine import Chain, RewriteTrace, rule_between
from .search import prove


@lru_cache(maxsize=None)
def commutes(n: int, a: GenSymbol, b: GenSymbol) -> bool:
    x = phi_letters(n, (a, b))
    y = phi_letters(n, (b, a))
    return x == y


@lru_cache(maxsize=None)
def _swap_lemma(n: int, a: GenSymbol, b: GenSymbol) -> RewriteTrace:
    return prove(n, (a, b), (b, a))


def swap(ch: Chain, pos: int) -> None:
    """Exchange the letters at ``pos`` and ``pos + 1``; they must commute."""
    a, b = ch.letters[pos], ch.letters[pos + 1]
    if a == b:
        return
    if rule_between(ch.n, (a, b), (b, a)) is not None:
        ch.step(pos, (a, b), (b, a))
        return
    if not commutes(ch.n, a, b):
        raise RewriteMismatch(f"{a} and {b} do not commute")
    ch.splice(_swap_lemma(ch.n, a, b), pos)


def move(ch: Chain, src: int, dst: int) -> None:
    """Carry the letter at ``src`` to index ``dst`` by adjacent swaps."""
    while src < dst:
        swap(ch, src)
        src += 1
    while src > dst:
        swap(ch, src - 1)
        src -= 1


def use(ch: Chain, pos: int, lhs, rhs) -> None:
    """Rewrite the factor ``lhs`` at ``pos`` into ``rhs`` (a catalog rule or a searched lemma)."""
    lhs, rhs = tuple(lhs), tuple(rhs)
    if ch.letters[pos:pos + len(lhs)] != lhs:
        raise RewriteMismatch("factor not present")
    if rule_between(ch.n, lhs, rhs) is not None:
        ch.step(pos, lhs, rhs)
    else:
        ch.splice(lemma(ch.n, lhs, rhs), pos)


@lru_cache(maxsize=None)
def lemma(n: int, lhs: tuple, rhs: tuple) -> RewriteTrace:
    return prove(n, lhs, rhs)

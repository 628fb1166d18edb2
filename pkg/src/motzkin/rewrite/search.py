"""Bounded search for short derivations between equal words.

Only used to certify small base identities (the few lemma base cases that are
not themselves catalog relations).  The search runs in the smallest width that
contains every letter, then the derivation is translated back.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import RewriteMismatch
from ..words import GenSymbol, Word, phi_letters
from .engine import Letters, RewriteStep, RewriteTrace, rule_index, shift_trace


def _span(letters: Letters) -> tuple[int, int]:
    lo = min(g.index for g in letters)
    hi = max(g.index + (0 if g.kind == "p" else 1) for g in letters)
    return lo, hi


def _neighbours(n: int, w: Letters, cap: int):
    idx = rule_index(n)
    lens = _key_lengths(n)
    for pos in range(len(w)):
        for m in lens:
            key = w[pos:pos + m]
            if len(key) < m:
                break
            for rel, d in idx.get(key, ()):
                st = RewriteStep(pos, rel, d)
                nxt = st.apply(w)
                if len(nxt) <= cap:
                    yield nxt, st


@lru_cache(maxsize=None)
def _key_lengths(n: int) -> tuple[int, ...]:
    return tuple(sorted({len(k) for k in rule_index(n)}))


@lru_cache(maxsize=4096)
def _search(n: int, u: Letters, v: Letters, cap: int, limit: int) -> tuple[RewriteStep, ...] | None:
    if u == v:
        return ()
    fwd = {u: None}
    bwd = {v: None}
    fr, br = [u], [v]
    explored = 0
    while fr and br and explored < limit:
        grow_fwd = len(fr) <= len(br)
        frontier, seen, other = (fr, fwd, bwd) if grow_fwd else (br, bwd, fwd)
        nxt_frontier = []
        for w in frontier:
            for nw, st in _neighbours(n, w, cap):
                explored += 1
                if nw in seen:
                    continue
                seen[nw] = (w, st)
                if nw in other:
                    return _join(fwd, bwd, nw)
                nxt_frontier.append(nw)
        if grow_fwd:
            fr = nxt_frontier
        else:
            br = nxt_frontier
    return None


def _join(fwd, bwd, mid) -> tuple[RewriteStep, ...]:
    head = []
    w = mid
    while fwd[w] is not None:
        prev, st = fwd[w]
        head.append(st)
        w = prev
    head.reverse()
    tail = []
    w = mid
    while bwd[w] is not None:
        prev, st = bwd[w]
        # st rewrites prev into w; walking forward we undo it
        tail.append(RewriteStep(st.position, st.rule, st.direction.flip()))
        w = prev
    return tuple(head) + tuple(tail)


def prove(n: int, u: Letters, v: Letters, slack: int = 4, limit: int = 400_000) -> RewriteTrace:
    """Find a catalog derivation of ``u = v`` in width ``n``."""
    u, v = tuple(u), tuple(v)
    if phi_letters(n, u)[0] != phi_letters(n, v)[0]:
        raise RewriteMismatch("the two words have different images")
    if u == v:
        return RewriteTrace(Word(n, u), (), Word(n, v))
    lo, hi = _span(u + v)
    for margin, extra in ((0, 2), (0, slack), (1, slack)):
        a, b = max(1, lo - margin), min(n, hi + margin)
        width = b - a + 1
        off = a - 1
        lu = tuple(GenSymbol(g.kind, g.index - off) for g in u)
        lv = tuple(GenSymbol(g.kind, g.index - off) for g in v)
        steps = _search(width, lu, lv, max(len(u), len(v)) + extra, limit)
        if steps is not None:
            local = RewriteTrace(Word(width, lu), steps, Word(width, lv))
            return shift_trace(local, off, n)
    raise RewriteMismatch(f"no short derivation found for {u} = {v}")

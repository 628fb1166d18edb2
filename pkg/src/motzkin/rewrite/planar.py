"""Certified normal forms for planar rook words.

RP words are folded one letter at a time onto the run form produced by
``factor_rp``; LP words are handled through the top-bottom flip.  General
planar rook words are brought to ``factor_rp(R) factor_lp(L)`` with a shared
middle ``{1..c}``.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import RewriteMismatch
from ..words import l, p, phi_letters, r
from .engine import Chain, RewriteTrace, reverse, star_letters, star_trace
from .moves import move, swap, use


def _settle(ch: Chain, pos: int, lo: int, hi: int) -> int:
    """Sort the p letter at ``pos`` into the ascending p block ``[lo, hi)``; returns new ``hi``."""
    c = ch.letters[pos].index
    while pos > lo and ch.letters[pos - 1].index > c:
        swap(ch, pos - 1)
        pos -= 1
    while pos < hi - 1 and ch.letters[pos + 1].index < c:
        swap(ch, pos)
        pos += 1
    g = ch.letters[pos]
    if pos > lo and ch.letters[pos - 1] == g:
        ch.step(pos - 1, (g, g), (g,))
        return hi - 1
    if pos < hi - 1 and ch.letters[pos + 1] == g:
        ch.step(pos, (g, g), (g,))
        return hi - 1
    return hi


class RPFold:
    """Keeps ``ch.letters[lo:end]`` equal to ``factor_rp`` of its image."""

    def __init__(self, ch: Chain, lo: int = 0, end: int | None = None):
        self.ch = ch
        self.lo = lo
        self.end = lo if end is None else end
        # bottom -> top
        self.edges = {b: a for a, b in image_edges(ch, lo, self.end).items()}

    def run_start(self, s: int) -> int:
        return self.lo + sum(a - b for b, a in self.edges.items() if b < s)

    def block_start(self) -> int:
        return self.lo + sum(a - b for b, a in self.edges.items())

    def push(self) -> None:
        """Absorb the letter at ``end``."""
        g = self.ch.letters[self.end]
        if g.kind == "p":
            self._p(g.index)
        elif g.kind == "r":
            self._r(g.index)
        else:
            raise RewriteMismatch(f"{g} is not a right planar rook letter")

    def _p(self, i: int) -> None:
        ch, e = self.ch, self.end
        a = self.edges.get(i)
        if a is None or a == i:
            self.edges.pop(i, None)
            self.end = _settle(ch, e, self.block_start(), e + 1)
            return
        s0 = self.run_start(i)
        length = a - i
        move(ch, e, s0 + length)
        # r_{a-1} ... r_i p_i  ->  p_i p_{i+1} ... p_a
        for m in range(i, a):
            at = s0 + length
            ch.step(at - 1, (r(m), p(m)), (p(m), p(m + 1)))
            move(ch, at - 1, s0 + (m - i))
        del self.edges[i]
        # the freed p letters travel right: absorbed by a run letter r_m or settled in the block
        hi = e + 1
        for k in range(length, -1, -1):
            pos = s0 + k
            m = ch.letters[pos].index
            while True:
                nxt = ch.letters[pos + 1] if pos + 1 < hi else None
                if nxt is None or nxt.kind == "p":
                    hi = _settle(ch, pos, self.block_start() + k, hi)
                    break
                if nxt.index == m:
                    ch.step(pos, (p(m), r(m)), (r(m),))
                    hi -= 1
                    break
                swap(ch, pos)
                pos += 1
        self.end = hi

    def _r(self, i: int) -> None:
        ch = self.ch
        if i in self.edges:
            e = self.end
            use(ch, e, (r(i),), (p(i), r(i)))
            self._p(i)
        e = self.end
        if i + 1 not in self.edges:
            q = ch.letters.index(p(i + 1), self.block_start(), e)
            move(ch, e, q + 1)
            use(ch, q, (p(i + 1), r(i)), (p(i), p(i + 1)))
            self.end = _settle(ch, q, self.block_start(), e + 1)
            return
        a = self.edges[i + 1]
        q = ch.letters.index(p(i), self.block_start(), e)
        move(ch, e, q + 1)
        ch.step(q, (p(i), r(i)), (r(i),))
        use(ch, q, (r(i),), (r(i), p(i + 1)))
        target = self.run_start(i + 1) + (a - i - 1)
        move(ch, q, target)
        del self.edges[i + 1]
        self.edges[i] = a
        self.end = e + 1


def rp_trace(n: int, letters) -> RewriteTrace:
    return _rp_trace(n, tuple(letters))


@lru_cache(maxsize=None)
def _rp_trace(n: int, letters: tuple) -> RewriteTrace:
    ch = Chain(n, letters)
    fold = RPFold(ch)
    while fold.end < len(ch.letters):
        fold.push()
    return ch.trace()


def lp_trace(n: int, letters) -> RewriteTrace:
    return _lp_trace(n, tuple(letters))


@lru_cache(maxsize=None)
def _lp_trace(n: int, letters: tuple) -> RewriteTrace:
    mirrored = star_trace(rp_trace(n, star_letters(letters)))
    ch = Chain(n, mirrored.start.letters)
    ch.splice(mirrored, 0)
    k = 0
    while k < len(ch.letters) and ch.letters[k].kind == "p":
        k += 1
    for pos in range(1, k):
        _settle(ch, pos, 0, pos + 1)
    return ch.trace()


def normalize_rp(ch: Chain, lo: int, hi: int) -> int:
    tr = rp_trace(ch.n, ch.letters[lo:hi])
    ch.splice(tr, lo)
    return lo + len(tr.end)


def normalize_lp(ch: Chain, lo: int, hi: int) -> int:
    tr = lp_trace(ch.n, ch.letters[lo:hi])
    ch.splice(tr, lo)
    return lo + len(tr.end)


def image_edges(ch: Chain, lo: int, hi: int) -> dict[int, int]:
    """Through edges ``top -> bottom`` of the factor ``[lo, hi)``."""
    partner, _ = phi_letters(ch.n, ch.letters[lo:hi])
    n = ch.n
    return {s + 1: partner[s] - n + 1 for s in range(n) if partner[s] >= n}


class LPFold:
    """Keeps ``ch.letters[lo:end]`` equal to ``factor_lp`` of its image.

    ``killed`` collects the top vertices whose edge was cut by the last push.
    """

    def __init__(self, ch: Chain, lo: int = 0, end: int | None = None):
        self.ch = ch
        self.lo = lo
        self.end = lo if end is None else end
        self.edges = image_edges(ch, lo, self.end)  # top -> bottom
        self.killed: list[int] = []

    @property
    def bottoms(self) -> dict[int, int]:
        return {b: s for s, b in self.edges.items()}

    def block_end(self) -> int:
        return self.lo + self.ch.n - len(self.edges)

    def run_start(self, s: int) -> int:
        return self.block_end() + sum(b - a for a, b in self.edges.items() if a > s)

    def run_end(self, s: int) -> int:
        return self.run_start(s) + self.edges[s] - s

    def push(self) -> None:
        self.killed = []
        g = self.ch.letters[self.end]
        {"p": self._p, "l": self._l, "r": self._r}[g.kind](g.index)

    def _float(self, pos: int) -> bool:
        """Carry a dead-end letter p_m left until a run letter l_m absorbs it or the block merges it."""
        ch = self.ch
        m = ch.letters[pos].index
        lo = self.lo
        while True:
            prev = ch.letters[pos - 1] if pos > lo else None
            if prev is None or prev.kind == "p":
                before = len(ch.letters)
                _settle(ch, pos, lo, pos + 1)
                return len(ch.letters) < before
            if prev.index == m:
                ch.step(pos - 1, (l(m), p(m)), (l(m),))
                return True
            if prev.index == m - 1:
                raise RewriteMismatch(f"p{m} is blocked by l{m - 1}")
            swap(ch, pos - 1)
            pos -= 1

    def _p(self, i: int) -> None:
        ch, e = self.ch, self.end
        s = self.bottoms.get(i)
        if s is None:
            self._float(e)
            return
        if s == i:
            del self.edges[s]
            self.killed.append(s)
            self._float(e)
            self.end = e + 1
            return
        at = self.run_end(s)
        move(ch, e, at)
        # l_s ... l_{i-1} p_i  ->  p_s ... p_i
        for q in range(i - 1, s - 1, -1):
            use(ch, at - 1, (l(q), p(q + 1)), (p(q), p(q + 1)))
            at -= 1
        del self.edges[s]
        self.killed.append(s)
        first = at
        removed = 0
        for k in range(i - s + 1):
            if self._float(first + k - removed):
                removed += 1
        self.end = e + 1 - removed

    def _insert_dead(self, m: int) -> None:
        """Rewrite the prefix L into L p_m for a dead bottom m (the reverse of a float)."""
        sub = Chain(self.ch.n, self.ch.letters[self.lo:self.end] + (p(m),))
        LPFold(sub, 0, self.end - self.lo)._float(self.end - self.lo)
        back = reverse(sub.trace())
        self.ch.splice(back, self.lo)

    def _l(self, i: int) -> None:
        ch = self.ch
        bots = self.bottoms
        if i not in bots:
            self._insert_dead(i)
            e = self.end
            use(ch, e, (p(i), l(i)), (p(i), p(i + 1)))
            self._p(i)
            self._p(i + 1)
            return
        if i + 1 in bots:
            use(ch, self.end, (l(i),), (p(i + 1), l(i)))
            self._p(i + 1)
            self._l(i)
            return
        s = bots[i]
        move(ch, self.end, self.run_end(s))
        self.edges[s] = i + 1
        self.end += 1

    def _r(self, i: int) -> None:
        ch = self.ch
        if i in self.bottoms:
            use(ch, self.end, (r(i),), (p(i), r(i)))
            self._p(i)
        bots = self.bottoms
        if i + 1 not in bots:
            self._insert_dead(i + 1)
            e = self.end
            use(ch, e, (p(i + 1), r(i)), (p(i), p(i + 1)))
            self._p(i)
            self._p(i + 1)
        else:
            s = bots[i + 1]
            if s == i + 1:
                raise RewriteMismatch("product leaves the left planar monoid")
            at = self.run_end(s)
            move(ch, self.end, at)
            ch.step(at - 1, (l(i), r(i)), (p(i + 1),))
            self.edges[s] = i
            if not self._float(at - 1):
                raise RewriteMismatch("dead end was not absorbed")
            self.end -= 1


def _split_lemma(n: int, s: int, c: int) -> RewriteTrace:
    """``p_s = (r_s ... r_{c-1})(l_{c-1} ... l_s)`` for ``s < c``."""
    ch = Chain(n, (p(s),))
    ch.step(0, (p(s),), (r(s), l(s)))
    for m in range(s, c - 1):
        use(ch, m - s, (r(m),), (r(m), p(m + 1)))
        ch.step(m - s + 1, (p(m + 1),), (r(m + 1), l(m + 1)))
    return ch.trace()


class PFold:
    """Keeps ``ch.letters[lo:end]`` equal to ``factor_rp(R) factor_lp(L)``, the planar rook normal form."""

    def __init__(self, ch: Chain, lo: int = 0):
        self.ch = ch
        self.lo = lo
        self.rp = RPFold(ch, lo)
        self.lp = LPFold(ch, lo)

    @property
    def mid(self) -> int:
        return self.rp.end

    @property
    def end(self) -> int:
        return self.lp.end

    def push(self) -> None:
        ch, lp = self.ch, self.lp
        g = ch.letters[lp.end]
        if g.kind == "r" and g.index in lp.bottoms:
            use(ch, lp.end, (g,), (p(g.index), g))
            lp.push()
            self._split()
        self.lp.push()
        self._split()

    def _split(self) -> None:
        lp = self.lp
        kills = sorted(lp.killed, reverse=True)
        lp.killed = []
        c = len(lp.edges) + len(kills)
        for k, s in enumerate(kills):
            self._split_one(s, c - k)

    def _split_one(self, s: int, c: int) -> None:
        lp, ch = self.lp, self.ch
        mid = self.mid
        tail = len(ch.letters) - lp.end
        # duplicate the block letter p_s and bring one copy to the front of L
        q = ch.letters.index(p(s), mid, lp.block_end())
        ch.step(q, (p(s),), (p(s), p(s)))
        move(ch, q, mid)
        if s < c:
            ch.splice(_split_lemma(ch.n, s, c), mid)
            for _ in range(c - s):
                self.rp.push()
            end = normalize_lp(ch, self.mid, len(ch.letters) - tail)
        else:
            self.rp.push()
            end = len(ch.letters) - tail
        self.lp = LPFold(ch, self.mid, end)


def p_trace(n: int, letters) -> RewriteTrace:
    return _p_trace(n, tuple(letters))


@lru_cache(maxsize=None)
def _p_trace(n: int, letters: tuple) -> RewriteTrace:
    ch = Chain(n, letters)
    fold = PFold(ch)
    while fold.end < len(ch.letters):
        fold.push()
    return ch.trace()


def normalize_p(ch: Chain, lo: int, hi: int) -> int:
    tr = p_trace(ch.n, ch.letters[lo:hi])
    ch.splice(tr, lo)
    return lo + len(tr.end)

"""Macro moves: each returns both sides of an identity and a certified derivation.

The derivations follow the inductive proofs: hop and slide recurse on their
length, fuse walks a dead end through the divisor two letters at a time, and
t-death peels one letter at a time off the Temperley-Lieb factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import BadIndices, LetterOutOfRange
from ..words import GenSymbol, Word, l, p, phi_letters, r, t
from .engine import Chain, RewriteTrace, reverse, shift_trace
from .moves import move, use
from .tl import sort_to, tl_equate, tl_factor, tl_normalize

Letters = tuple[GenSymbol, ...]


def _trace_words(trace: RewriteTrace) -> tuple[Word, Word, RewriteTrace]:
    return trace.start, trace.end, trace


# ---------------------------------------------------------------- hop


def hop_sides(i: int, k: int) -> tuple[Letters, Letters]:
    odd = tuple(t(m) for m in range(k - 1, i, -2))
    even = tuple(t(m) for m in range(k - 2, i - 1, -2))
    run = tuple(l(m) for m in range(k - 1, i - 1, -1))
    return odd + (p(i),), odd + even + run


@lru_cache(maxsize=None)
def _hop(n: int, i: int, k: int) -> RewriteTrace:
    lhs, rhs = hop_sides(i, k)
    if k == i + 2:
        # the base identity t_{i+1} p_i = t_{i+1} t_i l_{i+1} l_i, found once in width 3 and translated
        base = _hop_base()
        return shift_trace(base, i - 1, n)
    ch = Chain(n, lhs)
    ch.splice(_hop(n, i, k - 2), 1)
    m = (k - 2 - i) // 2  # letters in each t-block of the inner hop
    run_at = 1 + 2 * m
    ch.step(run_at, (l(k - 3),), (p(k - 2), l(k - 3)))
    move(ch, 0, run_at - 1)
    ch.splice(_hop(n, k - 2, k), run_at - 1)
    # t_{k-1} t_{k-2} l_{k-1} l_{k-2} now sits between the t-blocks and the l-run
    move(ch, run_at - 1, 0)
    move(ch, run_at, m + 1)
    if ch.letters != rhs:
        raise AssertionError("hop derivation ended off target")
    return ch.trace()


@lru_cache(maxsize=None)
def _hop_base() -> RewriteTrace:
    from .search import prove
    lhs, rhs = hop_sides(1, 3)
    return prove(3, lhs, rhs)


def macro_hop(i: int, k: int, n: int) -> tuple[Word, Word, RewriteTrace]:
    """``(t_{k-1} t_{k-3} .. t_{i+1}) p_i = (t_{k-1} .. t_{i+1})(t_{k-2} .. t_i)(l_{k-1} .. l_i)``."""
    if not (1 <= i < k <= n) or (k - i) % 2:
        raise BadIndices(f"hop needs i < k <= n with k - i even, got i={i}, k={k}, n={n}")
    return _trace_words(_hop(n, i, k))


# ---------------------------------------------------------------- slide


def _l_run(i: int, k: int) -> Letters:
    return tuple(l(m) for m in range(k - 1, i - 1, -1))


def slide_into(ch: Chain, at: int, i: int, k: int, count: int) -> None:
    """The l-run ``l_{k-1} .. l_i`` at ``at`` is followed by ``count`` t letters; carry them to its left."""
    for c in range(count):
        start = at + c  # run now begins here, previous t letters sit before it
        pos = start + (k - i)
        j = ch.letters[pos].index
        # l_{j-1} is the (k - j)th letter of the run
        move(ch, pos, start + (k - j) + 1)
        q = start + (k - j) - 1
        ch.step(q, (l(j), l(j - 1), t(j)), (t(j - 1), l(j), l(j - 1)))
        move(ch, q, start)


def macro_slide(l_run: tuple[int, int], t_word: Word) -> tuple[Word, RewriteTrace]:
    """``(l_{k-1} .. l_i) T = T' (l_{k-1} .. l_i)`` with every ``t_j`` of ``T`` becoming ``t_{j-1}``."""
    i, k = l_run
    n = t_word.n
    if not (1 <= i < k <= n):
        raise BadIndices(f"bad l-run ({i}, {k}) for width {n}")
    for g in t_word.letters:
        if g.kind != "t" or not (i + 1 <= g.index <= k - 1):
            raise LetterOutOfRange(f"{g} is outside t_{i + 1} .. t_{k - 1}")
    ch = Chain(n, _l_run(i, k) + t_word.letters)
    slide_into(ch, 0, i, k, len(t_word))
    shifted = Word(n, tuple(t(g.index - 1) for g in t_word.letters))
    return shifted, ch.trace()


# ---------------------------------------------------------------- burrow and wallslide


def macro_burrow(i: int, n: int) -> tuple[Word, Word, RewriteTrace]:
    """``t_{i-1} p_i = t_{i-1} t_i l_{i-1} l_i``."""
    if not (2 <= i <= n - 1):
        raise BadIndices(f"burrow needs 2 <= i <= n - 1, got i={i}, n={n}")
    ch = Chain(n, (t(i - 1), p(i)))
    ch.step(1, (p(i),), (r(i), l(i)))
    ch.step(0, (t(i - 1), r(i)), (t(i - 1), t(i), l(i - 1)))
    return _trace_words(ch.trace())


def macro_wallslide(T: Word, T_prime: Word, i: int) -> tuple[Word, Word, RewriteTrace]:
    """``T T' p_i = r_i T T' l_i`` for ``T`` over ``t_1 .. t_{i-2}`` and ``T'`` over ``t_{i+2} ..``."""
    n = T.n
    if T_prime.n != n:
        raise BadIndices("T and T' have different widths")
    if not (1 <= i <= n - 1):
        raise BadIndices(f"wallslide needs 1 <= i <= n - 1, got i={i}")
    for g in T.letters:
        if g.kind != "t" or g.index > i - 2:
            raise LetterOutOfRange(f"{g} is not in t_1 .. t_{i - 2}")
    for g in T_prime.letters:
        if g.kind != "t" or g.index < i + 2:
            raise LetterOutOfRange(f"{g} is not in t_{i + 2} .. t_{n - 1}")
    body = T.letters + T_prime.letters
    ch = Chain(n, body + (p(i),))
    move(ch, len(body), 0)
    ch.step(0, (p(i),), (r(i), l(i)))
    move(ch, 1, len(body) + 1)
    return _trace_words(ch.trace())


# ---------------------------------------------------------------- fuse


def fuse_divisor(case: int, i: int, j: int) -> Letters:
    if case == 1:
        return tuple(t(m) for m in range(j + 1, i, 2)) + tuple(t(m) for m in range(j, i - 1, 2))
    if case == 2:
        return tuple(t(m) for m in range(i, j - 1, 2)) + tuple(t(m) for m in range(i + 1, j, 2))
    if case == 3:
        return tuple(t(m) for m in range(i, j, 2)) + tuple(t(m) for m in range(i + 1, j - 1, 2))
    return tuple(t(m) for m in range(j, i, 2)) + tuple(t(m) for m in range(j + 1, i - 1, 2))


def _fuse_ok(case: int, i: int, j: int, n: int) -> bool:
    if not (1 <= i <= n and 1 <= j <= n):
        return False
    d = i - j
    return {1: d > 0 and d % 2 == 0, 2: d < 0 and d % 2 == 0,
            3: d < 0 and d % 2 == 1, 4: d > 0 and d % 2 == 1}[case]


@dataclass(frozen=True)
class FuseResult:
    """``lhs = rhs = third`` with a derivation for each equality; unpacks as ``(lhs, rhs, trace)``."""

    lhs: Word
    rhs: Word
    trace: RewriteTrace
    third: Word
    third_trace: RewriteTrace

    def __iter__(self):
        return iter((self.lhs, self.rhs, self.trace))


@lru_cache(maxsize=None)
def _fuse_pull(n: int, case: int, i: int, j: int) -> RewriteTrace:
    """Cases 1 and 2: ``x p_i = p_j x``, walking the dead end leftwards pair by pair."""
    x = fuse_divisor(case, i, j)
    ch = Chain(n, x + (p(i),))
    # pairs in the order the dead end meets them, read left to right as they must stand
    starts = list(range(j, i, 2)) if case == 1 else list(range(j - 2, i - 1, -2))
    pairs: list[Letters] = []
    for a in starts:
        pairs.append((t(a + 1), t(a)) if case == 1 else (t(a), t(a + 1)))
    sort_to(ch, 0, tuple(g for pr in pairs for g in pr))
    pos = len(x)
    m = i
    for _ in range(len(pairs)):
        # the dead end p_m sits right of a pair (A B); case 1 has A = t_{m-1}, B = t_{m-2}
        if case == 1:
            move(ch, pos, pos - 1)  # p_m passes t_{m-2}
            use(ch, pos - 2, (t(m - 1), p(m)), (t(m - 1), p(m - 1)))
            use(ch, pos - 1, (p(m - 1), t(m - 2)), (p(m - 2), t(m - 2)))
            move(ch, pos - 1, pos - 2)
            m -= 2
        else:
            move(ch, pos, pos - 1)  # p_m passes t_{m+1}
            use(ch, pos - 2, (t(m), p(m)), (t(m), p(m + 1)))
            use(ch, pos - 1, (p(m + 1), t(m + 1)), (p(m + 2), t(m + 1)))
            move(ch, pos - 1, pos - 2)
            m += 2
        pos -= 2
    sort_to(ch, 1, x)
    if ch.letters != (p(j),) + x:
        raise AssertionError("fuse derivation ended off target")
    return ch.trace()


@lru_cache(maxsize=None)
def _fuse_shift(n: int, case: int, i: int, j: int) -> RewriteTrace:
    """Cases 3 and 4: ``x p_a = x p_b`` where the first letter of ``x`` caps the walk."""
    x = fuse_divisor(case, i, j)
    a, b = (j, i) if case == 3 else (i, j)
    ch = Chain(n, x + (p(a),))
    first = x[0]
    if len(x) > 1:
        inner = _fuse_pull(n, 1, a, first.index + 1)
        ch.splice(inner, 1)
    # now x[0] p_{first+1} (rest)
    use(ch, 0, (first, p(first.index + 1)), (first, p(first.index)))
    move(ch, 1, len(x))
    if ch.letters != x + (p(b),):
        raise AssertionError("fuse derivation ended off target")
    return ch.trace()


def _double_last(n: int, letters: Letters, first: RewriteTrace) -> RewriteTrace:
    """From ``w g = v`` derive ``w g = v g`` by doubling the final letter."""
    ch = Chain(n, letters)
    g = letters[-1]
    ch.step(len(letters) - 1, (g,), (g, g))
    ch.splice(first, 0)
    return ch.trace()


def macro_fuse(case: int, i: int, j: int, n: int) -> FuseResult:
    """The fuse-wire identities for the divisor ``x`` of the given case.

    cases 1, 2: ``x p_i = p_j x = p_j x p_i``
    case 3: ``x p_j = x p_i = x p_j p_i``;  case 4: ``x p_i = x p_j = x p_i p_j``
    """
    if case not in (1, 2, 3, 4) or not _fuse_ok(case, i, j, n):
        raise BadIndices(f"fuse case {case} does not apply to i={i}, j={j}, n={n}")
    if case in (1, 2):
        tr = _fuse_pull(n, case, i, j)
        third = _double_last(n, tr.start.letters, tr)
        return FuseResult(tr.start, tr.end, tr, third.end, third)
    tr = _fuse_shift(n, case, i, j)
    # x p_a = x p_b, then x p_b = x p_b p_b = x p_a p_b
    back = reverse(tr)
    ch = Chain(n, tr.end.letters)
    last = len(ch.letters) - 1
    ch.step(last, (ch.letters[last],), (ch.letters[last], ch.letters[last]))
    ch.splice(back, 0)
    third = RewriteTrace(tr.start, tr.steps + ch.trace().steps, ch.trace().end)
    return FuseResult(tr.start, tr.end, tr, third.end, third)


# ---------------------------------------------------------------- t-death


def _dead_block(k: int, n: int) -> Letters:
    return tuple(p(m) for m in range(k, n + 1))


def _absorb_right(ch: Chain, pos: int, blo: int, bhi: int) -> None:
    """Carry the p letter at ``pos`` right into the ascending block ``[blo, bhi)`` and merge it."""
    from .planar import _settle
    move(ch, pos, blo - 1)
    _settle(ch, blo - 1, blo - 1, bhi)


def _pull_from_right(ch: Chain, m: int, blo: int, dst: int) -> None:
    """Duplicate ``p_m`` of the block starting at ``blo`` and carry the copy left to ``dst``."""
    q = ch.letters.index(p(m), blo)
    ch.step(q, (p(m),), (p(m), p(m)))
    move(ch, q, blo)
    move(ch, blo, dst)


def _pull_from_left(ch: Chain, m: int, bhi: int, dst: int) -> None:
    """Duplicate ``p_m`` of the block ending at ``bhi`` and carry the copy right to ``dst``."""
    q = ch.letters.index(p(m), 0, bhi)
    ch.step(q, (p(m),), (p(m), p(m)))
    move(ch, q + 1, bhi)
    move(ch, bhi, dst)


def _kill_cup(ch: Chain, at: int, i: int, blo: int) -> None:
    """``p_i t_i`` at ``at`` followed, further right, by the block at ``blo``: remove ``t_i``."""
    _pull_from_right(ch, i, blo, at + 2)
    # not derivable from the catalog: recorded as a supplement step
    ch.step(at, (p(i), t(i), p(i)), (p(i), p(i + 1)))
    _absorb_right(ch, at + 1, blo, len(ch.letters))
    _absorb_right(ch, at, at + 1, len(ch.letters))


def _death_step(ch: Chain, k: int, lo: int, hi: int) -> int:
    """``E T0 t_i E -> E T0' E`` for the factor ``T0 t_i = ch.letters[lo:hi]``; returns the new end of T0'."""
    n = ch.n
    hi = lo + (tl_normalize(ch, lo, hi - 1) - lo) + 1
    i = ch.letters[hi - 1].index
    body = ch.letters[lo:hi - 1]
    partner = phi_letters(n, body)[0]
    window = frozenset(range(k, n))
    mate = partner[n + i - 1]
    avoid = lambda *ms: frozenset(g for g in window if all(g not in (m - 1, m) for m in ms))
    if mate == i - 1:  # vertical strand at i
        _pull_from_left(ch, i, lo, hi - 1)
        _kill_cup(ch, hi - 1, i, hi + 1)
        return hi - 1
    if mate >= n:
        j = mate - n + 1
        if j == i + 1:
            a, _ = tl_factor(n, partner, (t(i),), window, frozenset())
            end = tl_equate(ch, lo, hi - 1, a + (t(i),))
            ch.step(end - 1, (t(i), t(i)), (t(i),))
            return end
        if j > i:
            x = fuse_divisor(3, i, j)
            a, b = tl_factor(n, partner, x, window, avoid(i, j))
            end = tl_equate(ch, lo, hi - 1, a + x + b)
            xe = lo + len(a) + len(x)
            blo = end + 1
            _pull_from_right(ch, j, blo, xe)
            # x p_j -> x p_j p_i, then carry p_i to the t_i
            ch.splice(macro_fuse(3, i, j, n).third_trace, lo + len(a))
            move(ch, xe + 1, end + 1)
            _kill_cup(ch, end + 1, i, end + 3)
            _absorb_right(ch, xe, end + 1, len(ch.letters))
            return end
        x = fuse_divisor(4, i, j)
        a, b = tl_factor(n, partner, x, window, avoid(i, j))
        end = tl_equate(ch, lo, hi - 1, a + x + b)
        xe = lo + len(a) + len(x)
        _pull_from_right(ch, j, end + 1, xe)
        ch.splice(reverse(macro_fuse(4, i, j, n).trace), lo + len(a))
        move(ch, xe, end)
        _kill_cup(ch, end, i, end + 2)
        return end
    j = mate + 1
    case = 2 if i < j else 1
    x = fuse_divisor(case, i, j)
    a, b = tl_factor(n, partner, x, avoid(j), avoid(i))
    end = tl_equate(ch, lo, hi - 1, a + x + b)
    xs = lo + len(a)
    _pull_from_left(ch, j, lo, xs)
    ch.splice(reverse(macro_fuse(case, i, j, n).trace), xs)
    move(ch, xs + len(x), end)
    _kill_cup(ch, end, i, end + 2)
    return end


def death_trace(n: int, k: int, body: Letters) -> RewriteTrace:
    e = _dead_block(k, n)
    ch = Chain(n, e + tuple(body) + e)
    lo = len(e)
    hi = lo + len(body)
    while hi > lo:
        hi = _death_step(ch, k, lo, hi)
    from .planar import _settle
    # merge the two blocks
    while len(ch.letters) > len(e):
        _settle(ch, len(e), 0, len(e) + 1)
    return ch.trace()


def macro_t_death(k: int, T: Word, n: int) -> tuple[Word, Word, RewriteTrace]:
    """``E T E = E`` with ``E = p_k .. p_n`` and ``T`` over ``t_k .. t_{n-1}``."""
    if not (1 <= k < n):
        raise BadIndices(f"t-death needs 1 <= k < n, got k={k}, n={n}")
    for g in T.letters:
        if g.kind != "t" or not (k <= g.index <= n - 1):
            raise LetterOutOfRange(f"{g} is not in t_{k} .. t_{n - 1}")
    return _trace_words(death_trace(n, k, T.letters))

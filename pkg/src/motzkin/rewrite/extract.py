"""Moving one dead edge of a Temperley-Lieb factor to the right edge.

A dead edge is an arc of ``T`` whose ends are killed by neighbouring ``p``
letters.  Removing it shifts the remaining vertices; the shift shows up as
an r-run on the left of ``T`` and l-letters on its right.  Every routine
here returns a certified trace and is cached on its inputs.
"""

from __future__ import annotations

from functools import lru_cache

from ..errors import RewriteMismatch
from ..words import GenSymbol, Word, l, p, phi_letters, r, t
from .engine import Chain, RewriteTrace, star_letters, star_trace
from .macros import _hop, macro_slide, slide_into
from .moves import move, swap, use
from .planar import _split_lemma
from .tl import sort_to, tl_equate, tl_factor

Letters = tuple[GenSymbol, ...]


def _touches(g: GenSymbol, col: int) -> bool:
    return g.index == col or g.index + 1 == col


def _other(g: GenSymbol, col: int) -> int:
    return g.index + 1 if col == g.index else g.index


@lru_cache(maxsize=None)
def fill_trace(n: int, body: Letters, c: int) -> RewriteTrace:
    """``T p_c`` into ``T p_c`` plus a ``p`` on the other end of the arc at bottom ``c``.

    A copy of ``p_c`` walks along the arc: through letters that leave its
    column alone, and across a cup by switching to the cup's other column.
    The end word is ``(p_a) T (p's)``, bottom letters sorted.
    """
    ch = Chain(n, body + (p(c),))
    m = len(body)
    use(ch, m, (p(c),), (p(c), p(c)))
    k, col, left = m, c, True
    while True:
        if left:
            if k == 0:
                break
            g = ch.letters[k - 1]
            if _touches(g, col):
                o = _other(g, col)
                use(ch, k - 1, (g, p(col)), (g, p(o)))
                col, left = o, False
            else:
                swap(ch, k - 1)
                k -= 1
        else:
            if k == m:
                break
            g = ch.letters[k + 1]
            if _touches(g, col):
                o = _other(g, col)
                use(ch, k, (p(col), g), (p(o), g))
                col, left = o, True
            else:
                swap(ch, k)
                k += 1
    if k == m and col > c:
        swap(ch, m)
    return ch.trace()


@lru_cache(maxsize=None)
def fill_top_trace(n: int, body: Letters, c: int) -> RewriteTrace:
    """Mirror of ``fill_trace``: ``p_c T`` gains the ``p`` at the arc's other end."""
    return star_trace(fill_trace(n, star_letters(body), c))


@lru_cache(maxsize=None)
def _star_slide(n: int, body: Letters, i: int, k: int) -> RewriteTrace:
    """``T (r_i .. r_{k-1}) = (r_i .. r_{k-1}) T'`` with every index of ``T`` lowered by one."""
    _, tr = macro_slide((i, k), Word(n, star_letters(body)))
    return star_trace(tr)


def _r_run(a: int, n: int) -> Letters:
    return tuple(r(m) for m in range(a, n))


def _strand_left(n: int, a: int, b: int) -> Letters:
    return _r_run(a, n) if a < n else (p(n),)


def _strand_right(n: int, a: int, b: int) -> Letters:
    return tuple(l(m) for m in range(n - 1, b - 1, -1)) if b < n else (p(n),)


def _zig(a: int, b: int) -> Letters:
    return tuple(t(m) for m in range(a + 1, b, 2)) + tuple(t(m) for m in range(a, b - 1, 2))


@lru_cache(maxsize=None)
def _zig_trace(n: int, a: int, b: int) -> RewriteTrace:
    """``p_a Z p_b`` for the zigzag ``Z`` carrying top ``a`` to bottom ``b >= a``."""
    if a == b:
        ch = Chain(n, (p(a), p(a)))
        if a < n:
            ch.step(0, (p(a), p(a)), (p(a),))
            ch.splice(_split_lemma(n, a, n), 0)
        return ch.trace()
    # Z = (t_{a+1} t_a) Z' up to commutation, Z' the zigzag from a + 2 to b
    z = _zig(a, b)
    pairs = ()
    for m in range(a, b, 2):
        pairs += (t(m + 1), t(m))
    ch = Chain(n, (p(a),) + z + (p(b),))
    sort_to(ch, 1, pairs)
    use(ch, 0, (p(a), t(a + 1), t(a)), (p(a), t(a + 1), t(a), p(a + 2)))
    ch.splice(_zig_trace(n, a + 2, b), 3)
    if a + 2 < n:
        use(ch, 3, (r(a + 2),), (p(a + 2), r(a + 2)))
        use(ch, 0, (p(a), t(a + 1), t(a), p(a + 2)), (r(a), r(a + 1), t(a), p(a + 2)))
        use(ch, 3, (p(a + 2), r(a + 2)), (r(a + 2),))
        move(ch, 2, 2 + (n - a - 2))
    else:
        use(ch, 0, (p(a), t(a + 1), t(a), p(n)), (r(a), r(a + 1), t(a), p(n)))
        move(ch, 3, 2)
        use(ch, 1, (r(n - 1), p(n)), (r(n - 1),))
    return ch.trace()


@lru_cache(maxsize=None)
def strand_trace(n: int, a: int, b: int, body: Letters) -> RewriteTrace:
    """``p_a T p_b = (r_a .. r_{n-1}) T' (l_{n-1} .. l_b)`` for a through arc from top ``a`` to bottom ``b``.

    ``T'`` is ``T`` with the arc taken out and a vertical line added on the
    right.  An end at column ``n`` leaves ``p_n`` in place of its run.
    """
    if a > b:
        return star_trace(strand_trace(n, b, a, star_letters(body)))
    ch = Chain(n, (p(a),) + body + (p(b),))
    z = _zig(a, b)
    f = tl_factor(n, phi_letters(n, body)[0], z, frozenset(range(a + 1, n)), frozenset(range(1, b - 1)))
    if f is None:
        raise RewriteMismatch("no zigzag factorization")
    A, B = f
    tl_equate(ch, 1, 1 + len(body), A + z + B)
    al, zl = len(A), len(z)
    move(ch, 0, al)
    move(ch, al + zl + len(B) + 1, al + zl + 1)
    ch.splice(_zig_trace(n, a, b), al)
    left = _strand_left(n, a, b)
    right = _strand_right(n, a, b)
    mid = al + len(left) + zl // 2
    for q in range(len(right)):
        # each l letter of the right part passes B
        move(ch, mid + len(right) - 1 - q, mid + len(right) - 1 - q + len(B))
    if A and left:
        ch.splice(_star_slide(n, A, a, n), 0)
    return ch.trace()


def _x_cup(b1: int, b2: int) -> Letters:
    return (tuple(t(m) for m in range(b2 - 1, b1 - 1, -2))
            + tuple(t(m) for m in range(b2 - 2, b1, -2)))


@lru_cache(maxsize=None)
def cup_trace(n: int, b1: int, b2: int, body: Letters) -> RewriteTrace:
    """``T p_{b1} p_{b2}`` for a bottom cup ``(b1, b2)`` of ``T`` into ``T' Q``.

    ``T'`` has the cup moved to ``(n-1, n)`` and ``Q`` is a word over l and p.
    """
    ch = Chain(n, body + (p(b1), p(b2)))
    key = phi_letters(n, body)[0]
    c = b1
    if b2 > b1 + 1:
        x = _x_cup(b1, b2)
        f = tl_factor(n, key, x, frozenset(range(1, n)), frozenset(range(b1 + 1, b2 - 1)))
        if f is None:
            raise RewriteMismatch("no cup factorization")
        A, B = f
        tl_equate(ch, 0, len(body), A + x + B)
        m = len(A) + len(x) + len(B)
        move(ch, m, m - len(B))
        inner = len(A) + (b2 - b1 + 1) // 2
        ch.splice(_hop(n, b1, b2 - 1), inner)
        run_at = inner + (b2 - b1 - 1) // 2 + (b2 - b1 - 1) // 2
        slide_into(ch, run_at, b1, b2 - 1, len(B))
        tl_end = run_at + len(B)
        use(ch, tl_end, (l(b2 - 2),), (p(b2 - 1), l(b2 - 2)))
        body2 = ch.letters[:tl_end]
        ch.splice(fill_trace(n, body2, b2 - 1), 0)
        c = b2 - 1
    else:
        tl_end = len(body)
    T = ch.letters[:tl_end]
    f = tl_factor(n, phi_letters(n, T)[0], (t(c),), frozenset(range(1, n)), frozenset())
    if f is None:
        raise RewriteMismatch("cup is not at the end")
    T0 = f[0]
    tl_equate(ch, 0, tl_end, T0 + (t(c),))
    q = len(T0)
    while c + 1 < n:
        use(ch, q, (t(c), p(c), p(c + 1)), (t(c), t(c + 1), l(c), l(c + 1)))
        if c + 2 < n:
            use(ch, q + 2, (l(c), l(c + 1)), (p(c + 1), p(c + 2), l(c), l(c + 1)))
        q += 1
        c += 1
    return ch.trace()


@lru_cache(maxsize=None)
def top_cup_trace(n: int, a1: int, a2: int, body: Letters) -> RewriteTrace:
    """Mirror of ``cup_trace``: ``p_{a2} p_{a1} T`` for a top cup into ``Q T'``."""
    return star_trace(cup_trace(n, a1, a2, star_letters(body)))

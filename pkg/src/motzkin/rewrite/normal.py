"""Certified normalization of Motzkin words.

A word is folded one letter at a time onto standard words.  Each step
(``absorb``) first brings ``standard word . letter`` to the shape
``P1 T P2`` (planar rook words around a Temperley-Lieb word), then runs
compression rounds that move one dead arc of ``T`` to the right edge until
``beta(P1)`` and ``tau(P2)`` are initial segments, and finally lays out the
dead arcs the way the standard word does.  Steps are cached by
``(standard word, letter)``, so a fold costs one lookup per letter once the
cache is warm.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..diagram import Diagram, beta, tau
from ..errors import NonTermination, RewriteMismatch
from ..structure import StandardWord, standard_word
from ..words import GenSymbol, Word, l, p, phi_letters, r, t
from .engine import Chain, RewriteTrace, reverse
from .extract import _strand_left, _strand_right, cup_trace, fill_top_trace, fill_trace, strand_trace, top_cup_trace
from .moves import move, use
from .planar import lp_trace, normalize_lp, normalize_p, normalize_rp, p_trace
from .tl import sort_to, tl_equate, tl_factor

Letters = tuple[GenSymbol, ...]


# ---------------------------------------------------------------- weights


@dataclass(frozen=True, order=True)
class SubsetWeight:
    """``sum(2**i for i in X)``: compares subsets of ``{1..n}`` by their largest differing element."""

    value: int

    def __int__(self) -> int:
        return self.value


def subset_weight(xs) -> SubsetWeight:
    return SubsetWeight(sum(1 << i for i in xs))


# ---------------------------------------------------------------- helpers


def _diagram(n: int, letters: Letters) -> Diagram:
    return Diagram(n, phi_letters(n, letters)[0])


@lru_cache(maxsize=None)
def _standard(n: int, letters: Letters) -> StandardWord:
    return standard_word(_diagram(n, letters))


def _is_initial(xs) -> bool:
    return set(xs) == set(range(1, len(xs) + 1))


def _edges(n: int, body: Letters):
    """Arcs of a t-word as pairs of ``('t'|'b', index)``."""
    partner = phi_letters(n, body)[0]

    def v(s: int):
        return ("t", s + 1) if s < n else ("b", s - n + 1)

    return [(v(s), v(q)) for s, q in enumerate(partner) if q > s]


@dataclass
class _Kernel:
    """``ch.letters[lo:a]`` is P1, ``[a:b]`` is T, ``[b:hi]`` is P2."""

    ch: Chain
    lo: int
    a: int
    b: int
    hi: int
    weights: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.ch.n

    def p1(self) -> Letters:
        return self.ch.letters[self.lo:self.a]

    def body(self) -> Letters:
        return self.ch.letters[self.a:self.b]

    def p2(self) -> Letters:
        return self.ch.letters[self.b:self.hi]

    def live(self) -> tuple[frozenset[int], frozenset[int]]:
        return beta(_diagram(self.n, self.p1())), tau(_diagram(self.n, self.p2()))

    def weight(self) -> tuple[SubsetWeight, SubsetWeight]:
        u, v = self.live()
        return subset_weight(v), subset_weight(u)

    def tidy(self) -> None:
        ch = self.ch
        new_a = normalize_p(ch, self.lo, self.a)
        shift = new_a - self.a
        self.a, self.b, self.hi = new_a, self.b + shift, self.hi + shift
        self.hi = normalize_p(ch, self.b, self.hi)

    def put_right(self, c: int) -> None:
        """Prefix P2 with ``p_c``; bottom ``c`` must be dead in P2."""
        ch = self.ch
        tr = p_trace(self.n, (p(c),) + self.p2())
        if tr.end.letters != self.p2():
            raise RewriteMismatch("p letter is not absorbed by P2")
        ch.splice(reverse(tr), self.b)
        self.hi += 1

    def put_left(self, c: int) -> None:
        ch = self.ch
        tr = p_trace(self.n, self.p1() + (p(c),))
        if tr.end.letters != self.p1():
            raise RewriteMismatch("p letter is not absorbed by P1")
        ch.splice(reverse(tr), self.lo)
        self.a += 1
        self.b += 1
        self.hi += 1

    def extract(self, e) -> None:
        """Move arc ``e`` of T to the right edge; at least one end must be dead."""
        n, ch = self.n, self.ch
        u, v = self.live()
        (s1, i1), (s2, i2) = e
        body = self.body()
        size = len(body) + 2
        if s1 == "t" and s2 == "b":
            a, b = i1, i2
            if b not in v:
                self.put_right(b)
                ch.splice(fill_trace(n, body, b), self.a)
                start = self.a
            else:
                self.put_left(a)
                ch.splice(fill_top_trace(n, body, a), self.a - 1)
                start = self.a - 1
            tr = strand_trace(n, a, b, body)
            left, right = len(_strand_left(n, a, b)), len(_strand_right(n, a, b))
        elif s1 == "b":
            b1, b2 = i1, i2
            c = b1 if b1 not in v else b2
            self.put_right(c)
            ch.splice(fill_trace(n, body, c), self.a)
            start = self.a
            tr = cup_trace(n, b1, b2, body)
            end = tr.end.letters
            left = 0
            right = len(end) - next(k for k in range(len(end) + 1)
                                    if k == len(end) or end[k].kind != "t")
        else:
            a1, a2 = i1, i2
            c = a2 if a2 not in u else a1
            self.put_left(c)
            ch.splice(fill_top_trace(n, body, c), self.a - 1)
            start = self.a - 1
            tr = top_cup_trace(n, a1, a2, body)
            end = tr.end.letters
            right = 0
            left = len(end) - next(k for k in range(len(end) + 1)
                                   if k == len(end) or end[len(end) - 1 - k].kind != "t")
        ch.splice(tr, start)
        total = len(tr.end)
        # P1 and P2 now also hold the fill and put letters; recompute the borders
        self.hi = self.hi + 1 + (total - size)
        self.a = start + left
        self.b = start + total - right

    # ------------------------------------------------------------ rounds

    def violation(self):
        """The arc to move next, or ``None`` once P1 and P2 are minimal."""
        u, v = self.live()
        edges = _edges(self.n, self.body())

        def alive(x):
            side, i = x
            return i in (u if side == "t" else v)

        # an arc with exactly one dead end, smallest dead index first (bottom row first)
        half = []
        for e in edges:
            if alive(e[0]) != alive(e[1]):
                dead = e[0] if not alive(e[0]) else e[1]
                half.append((dead[0] != "b", dead[1], e))
        if half:
            return min(half)[2]
        for side, live in (("b", v), ("t", u)):
            gaps = [i for i in range(1, self.n) if i not in live and any(x > i for x in live)]
            if gaps:
                i = gaps[0]
                return next(e for e in edges if (side, i) in e)
        return None

    def minimize(self) -> None:
        self.tidy()
        self.weights = [self.weight()]
        while True:
            e = self.violation()
            if e is None:
                return
            self.extract(e)
            self.tidy()
            w = self.weight()
            if not w < self.weights[-1]:
                raise NonTermination(f"weight pair did not decrease: {self.weights[-1]} -> {w}")
            self.weights.append(w)

    # ------------------------------------------------------------ layout of dead arcs

    def layout(self) -> None:
        """Arrange the dead arcs as in the standard word, then fix every factor's spelling."""
        n, ch = self.n, self.ch
        u, v = self.live()
        k, j = len(u), len(v)
        target = _standard(n, ch.letters[self.lo:self.hi])
        t_target = phi_letters(n, target.t_part.letters)[0]
        if phi_letters(n, self.body())[0] != t_target:
            self._arrange(k, j)
            self._kill_pairs(k, j)
        tl_equate(ch, self.a, self.b, target.t_part.letters)
        self.b = self.a + len(target.t_part)
        end = normalize_lp(ch, self.b, self.hi)
        self.hi = end
        new_a = normalize_rp(ch, self.lo, self.a)
        shift = new_a - self.a
        self.a, self.b, self.hi = new_a, self.b + shift, self.hi + shift
        if ch.letters[self.lo:self.hi] != target.word.letters:
            raise RewriteMismatch("layout did not reach the standard word")

    def _arrange(self, k: int, j: int) -> None:
        """Move every dead arc to the right edge, in an order that leaves the standard layout."""
        n = self.n
        placed_top = placed_bottom = 0
        plan = []
        body = self.body()
        edges = _edges(n, body)
        n_bcup = sum(1 for e in edges if e[0][0] == "b" and e[0][1] > j)
        n_tcup = sum(1 for e in edges if e[1][0] == "t" and e[0][1] > k)
        extra = (k - j) // 2 if k > j else (j - k) // 2
        first = "b" if k > j else "t"
        plan = [first] * extra
        pairs = min(n_bcup, n_tcup)
        plan += ["b", "t"] * pairs
        n_vert = sum(1 for e in edges if e[0][0] == "t" and e[1][0] == "b" and e[0][1] > k)
        plan += ["v"] * n_vert
        for kind in plan:
            edges = _edges(n, self.body())

            def done(x):
                side, i = x
                return i > n - (placed_top if side == "t" else placed_bottom)

            cand = []
            for e in edges:
                if done(e[0]) and done(e[1]):
                    continue
                if kind == "v" and e[0][0] == "t" and e[1][0] == "b" and e[0][1] > k:
                    cand.append(e)
                elif kind == "b" and e[0][0] == "b" and e[0][1] > j:
                    cand.append(e)
                elif kind == "t" and e[1][0] == "t" and e[0][1] > k:
                    cand.append(e)
            e = min(cand, key=lambda e: e[0][1])
            self.extract(e)
            self.tidy()
            if kind in "vt":
                placed_top += 1 if kind == "v" else 2
            if kind in "vb":
                placed_bottom += 1 if kind == "v" else 2

    def _kill_pairs(self, k: int, j: int) -> None:
        """A dead top cup over a dead bottom cup on the same two columns becomes two dead points."""
        n, ch = self.n, self.ch
        while True:
            partner = phi_letters(n, self.body())[0]
            cols = [c for c in range(max(k, j) + 1, n)
                    if partner[c - 1] == c and partner[n + c - 1] == n + c]
            if not cols:
                return
            c = cols[0]
            f = tl_factor(n, partner, (t(c),), frozenset(), frozenset(range(1, n)))
            rest = f[1]
            tl_equate(ch, self.a, self.b, (t(c),) + rest)
            self.b = self.a + 1 + len(rest)
            # p_c from the end of P1, another p_c from the front of P2
            p1 = self.p1()
            q = max(i for i, g in enumerate(p1) if g == p(c)) + self.lo
            move(ch, q, self.a - 1)
            p2 = self.p2()
            q = p2.index(p(c)) + self.b
            use(ch, q, (p(c),), (p(c), p(c)))
            move(ch, q, self.a + 1)
            ch.step(self.a - 1, (p(c), t(c), p(c)), (p(c), p(c + 1)))
            # p_c p_{c+1} now end P1
            self.a += 1
            self.b = self.a + len(rest)
            self.tidy()


def _run_kernel(ch: Chain, lo: int, a: int, b: int, hi: int, log: list | None) -> int:
    ker = _Kernel(ch, lo, a, b, hi)
    ker.minimize()
    if log is not None:
        log.append(tuple(ker.weights))
    ker.layout()
    return ker.hi


# ---------------------------------------------------------------- one letter


@dataclass(frozen=True)
class Step:
    """``state . letter`` rewritten into the next standard word."""

    trace: RewriteTrace
    state: Letters
    rounds: tuple  # weight-pair sequences of every compression run inside the step


_CACHE: dict[tuple[int, Letters, GenSymbol], Step] = {}


def absorb(n: int, state: Letters, x: GenSymbol) -> Step:
    """Rewrite ``state x`` (``state`` standard) into the standard word of its image."""
    key = (n, state, x)
    hit = _CACHE.get(key)
    if hit is None:
        if _standard(n, state).word.letters != state:
            raise RewriteMismatch("absorb needs a standard word")
        log: list = []
        ch = Chain(n, state + (x,))
        end = _absorb_into(ch, len(state), log)
        hit = Step(ch.trace(), ch.letters[:end], tuple(log))
        if end != len(ch.letters):
            raise RewriteMismatch("absorb left letters behind")
        _CACHE[key] = hit
    return hit


def _fold_at(ch: Chain, m: int, log: list) -> int:
    """``ch.letters[:m]`` is standard; absorb the letter at ``m`` through the cache."""
    st = absorb(ch.n, ch.letters[:m], ch.letters[m])
    # cached steps were replayed once when the step was built
    ch.append_replayed(st.trace)
    log.extend(st.rounds)
    return len(st.state)


def _absorb_into(ch: Chain, m: int, log: list) -> int:
    n = ch.n
    sw = _standard(n, ch.letters[:m])
    rl, tl = len(sw.r_part), len(sw.t_part)
    x = ch.letters[m]
    if x.kind != "t":
        return _run_kernel(ch, 0, rl, rl + tl, m + 1, log)
    return _t_step(ch, m, sw, x.index, log, finish=True)


def _t_step(ch: Chain, m: int, sw: StandardWord, i: int, log: list, finish: bool) -> int:
    """Append ``t_i`` to the standard word ``ch.letters[:m]``.

    Returns the end of the standard word, or with ``finish=False`` the end
    of a word of shape ``P1 T P2`` (the caller then runs the kernel).
    """
    n = ch.n
    rl, tl = len(sw.r_part), len(sw.t_part)
    lo_l = rl + tl
    L = sw.l_part.letters
    bl = beta(_diagram(n, L))
    done = (lambda a, b, hi: _run_kernel(ch, 0, a, b, hi, log)) if finish else (lambda a, b, hi: (a, b, hi))

    if i in bl and i + 1 in bl:
        s = sorted(bl).index(i) + 1
        _double_slide(ch, lo_l, L, s, i)
        # t_s now sits in front of L
        return done(rl, lo_l + 1, m + 1)

    if (i in bl) != (i + 1 in bl):
        c = i + 1 if i in bl else i
        tr = lp_trace(n, L + (p(c),))
        if tr.end.letters != L:
            raise RewriteMismatch("p letter is not absorbed by L")
        ch.splice(reverse(tr), lo_l)
        use(ch, m, (p(c), t(i)), (p(i), p(i + 1), t(i)))
        m1 = _fold_at(ch, m, log)
        m2 = _fold_at(ch, m1, log)
        return _t_step(ch, m2, _standard(n, ch.letters[:m2]), i, log, finish)

    if i + 1 == n:
        return _t_last(ch, m, sw, log, done)

    if i + 2 not in bl:
        ext = (p(i), p(i + 1), p(i + 2))
        tr = lp_trace(n, L + ext)
        if tr.end.letters != L:
            raise RewriteMismatch("p letters are not absorbed by L")
        ch.splice(reverse(tr), lo_l)
        use(ch, m, ext + (t(i),), ext + (t(i + 1), r(i), r(i + 1)))
        ch.splice(tr, lo_l)
        # now state . t_{i+1} r_i r_{i+1}
        if not finish:
            a, b, hi = _t_step(ch, m, sw, i + 1, log, finish=False)
            return a, b, hi + 2
        m1 = _fold_at(ch, m, log)
        m2 = _fold_at(ch, m1, log)
        return _fold_at(ch, m2, log)

    # strand into bottom i + 2: L = L0 l_i l_{i+1}
    edges = dict((b, a) for a, b in _diagram(n, L).through_edges)
    s = edges[i + 2]
    pairs = [(a, b) for b, a in edges.items() if b != i + 2] + [(s, i)]
    from ..structure import _rook, factor_lp
    L0 = factor_lp(_rook(n, pairs)).letters
    tr = lp_trace(n, L0 + (l(i), l(i + 1)))
    if tr.end.letters != L:
        raise RewriteMismatch("L does not split off l_i l_{i+1}")
    ch.splice(reverse(tr), lo_l)
    q = lo_l + len(L0)
    use(ch, q, (l(i), l(i + 1), t(i)), (p(i + 1), p(i + 2), t(i + 1), t(i)))
    k = q
    for _ in range(3):
        k = _fold_at(ch, k, log)
    if not finish:
        return _t_step(ch, k, _standard(n, ch.letters[:k]), i, log, finish=False)
    return _fold_at(ch, k, log)


def _double_slide(ch: Chain, lo_l: int, L: Letters, s: int, i: int) -> None:
    """``L t_i = t_s L`` when tops ``s, s+1`` of L end at bottoms ``i, i+1``."""
    pos = lo_l + len(L)
    if i == s:
        move(ch, pos, lo_l)
        return
    # L is its p block followed by one l-run per top, tops descending
    off = sum(1 for g in L if g.kind == "p")
    for a, b in sorted(_diagram(ch.n, L).through_edges, reverse=True):
        if a == s + 1:
            break
        off += b - a
    start = lo_l + off
    runs = tuple(l(m) for m in range(s + 1, i + 1)) + tuple(l(m) for m in range(s, i))
    move(ch, pos, start + len(runs))
    pairs = ()
    for m in range(s, i):
        pairs += (l(m + 1), l(m))
    sort_to(ch, start, pairs)
    for m in range(i - 1, s - 1, -1):
        use(ch, start + 2 * (m - s), (l(m + 1), l(m), t(m + 1)), (t(m), l(m + 1), l(m)))
    sort_to(ch, start + 1, runs)
    move(ch, start, lo_l)


def _t_last(ch: Chain, m: int, sw: StandardWord, log: list, done):
    """Append ``t_{n-1}`` when bottoms ``n-1`` and ``n`` of L are dead."""
    n = ch.n
    rl, tl = len(sw.r_part), len(sw.t_part)
    lo_l = rl + tl
    nb = sum(1 for g in sw.l_part.letters if g.kind == "p")
    # the p block ends with p_{n-1} p_n; bring p_{n-1} p_n t_{n-1} to the front of L
    move(ch, lo_l + nb - 2, lo_l)
    move(ch, lo_l + nb - 1, lo_l + 1)
    move(ch, m, lo_l + 2)
    partner = phi_letters(n, sw.t_part.letters)[0]
    bottom = lambda i: partner[n + i - 1]  # noqa: E731
    if bottom(n - 1) == n - 2 and bottom(n) == n - 1:
        for q in range(3):
            move(ch, lo_l + q, rl + q)
        return done(rl + 2, rl + 3 + tl, m + 1)
    if bottom(n - 1) == 2 * n - 1:
        g = n - 1
        out = (t(n - 1),)
    elif bottom(n - 2) == 2 * n - 2 and bottom(n) == n - 1:
        g = n - 2
        out = (t(n - 2), l(n - 1), l(n - 2))
    else:
        raise RewriteMismatch("unexpected right edge of T")
    T0 = tl_factor(n, partner, (t(g),), frozenset(range(1, n)), frozenset())[0]
    tl_equate(ch, rl, lo_l, T0 + (t(g),))
    lo_l = rl + len(T0) + 1
    m = m + (lo_l - rl - tl)
    use(ch, lo_l - 1, (t(g), p(n - 1), p(n), t(n - 1)), out)
    return done(rl, lo_l, m + 1 - 4 + len(out))


# ---------------------------------------------------------------- public


def _fold(ch: Chain, m: int, stop: int, log: list) -> int:
    """Fold the letters ``m..stop-1`` into the standard prefix ``ch.letters[:m]``."""
    for _ in range(stop - m):
        m = _fold_at(ch, m, log)
    return m


def _ptp_bounds(letters: Letters) -> tuple[int, int] | None:
    """``(a, b)`` with ``letters[:a]`` free of t, ``[a:b]`` all t and ``[b:]`` free of t."""
    a = next((k for k, g in enumerate(letters) if g.kind == "t"), len(letters))
    b = next((k for k in range(a, len(letters)) if letters[k].kind != "t"), len(letters))
    if any(g.kind == "t" for g in letters[b:]):
        return None
    return a, b


def is_ptp(w: Word) -> bool:
    return _ptp_bounds(w.letters) is not None


def ptp_trace(w: Word) -> RewriteTrace:
    """Certified rewrite of ``w`` into a word ``P1 T P2``.

    Everything before the last t letter is folded into a standard word
    ``R T L``; the last t is then pushed into the middle by the case split
    on the live bottoms of ``L``.
    """
    ch = Chain(w.n, w.letters)
    if is_ptp(w):
        return ch.trace()
    q = max(k for k, g in enumerate(w.letters) if g.kind == "t")
    m = _fold(ch, 0, q, [])
    _t_step(ch, m, _standard(w.n, ch.letters[:m]), ch.letters[m].index, [], finish=False)
    return ch.trace()


def to_ptp(w: Word) -> Word:
    return ptp_trace(w).end


@dataclass(frozen=True)
class MinimalRun:
    """Result of one compression run: the word, its certificate and the weight pair per round.

    ``word.letters[:a]`` is P1, ``[a:b]`` is T and ``[b:]`` is P2.
    """

    word: Word
    trace: RewriteTrace
    weights: tuple[tuple[SubsetWeight, SubsetWeight], ...]
    a: int
    b: int


def minimal_rtl_run(w: Word) -> MinimalRun:
    """Compress a ``P1 T P2`` word until no arc of T joins a live end to a dead one."""
    if not is_ptp(w):
        w = to_ptp(w)
    a, b = _ptp_bounds(w.letters)
    ch = Chain(w.n, w.letters)
    ker = _Kernel(ch, 0, a, b, len(w.letters))
    ker.minimize()
    tr = ch.trace()
    return MinimalRun(tr.end, tr, tuple(ker.weights), ker.a, ker.b)


def to_minimal_rtl(w: Word) -> Word:
    return minimal_rtl_run(w).word


def normalize_trace(w: Word, log: list | None = None) -> RewriteTrace:
    """Certified rewrite of ``w`` into its standard word.

    ``log`` collects the weight-pair sequence of every compression run.
    """
    ch = Chain(w.n, w.letters)
    _fold(ch, 0, len(w.letters), [] if log is None else log)
    return ch.trace()


def normalize(w: Word) -> StandardWord:
    """Standard word of ``w``, reached by catalog rewriting plus the supplement relation."""
    end = normalize_trace(w).end
    sw = _standard(w.n, end.letters)
    if sw.word.letters != end.letters:
        raise RewriteMismatch("normalization stopped short of the standard word")
    return sw

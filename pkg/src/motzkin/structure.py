"""Structural algorithms on Motzkin diagrams.

The central construction splits a Motzkin diagram ``d`` as ``r * t * l`` with
``r`` a right planar rook diagram, ``t`` a Temperley-Lieb diagram and ``l`` a
left planar rook diagram.  From that triple each factor is written as a word,
and the concatenation is the standard word of ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .diagram import (
    EMPTY,
    Diagram,
    Monoid,
    Row,
    VertexRef,
    beta,
    belongs,
    compose,
    tau,
)
from .errors import InvalidBallot, NotInRP, NotInTL
from .words import GenSymbol, Word, l, p, phi_letters, r, t, word_print


# --- the * antiisomorphism ----------------------------------------------------


def star(d: Diagram) -> Diagram:
    """Swap the two rows, keeping every connection."""
    n = d.n

    def flip(s: int) -> int:
        return s + n if s < n else s - n

    partner = [EMPTY] * (2 * n)
    for s, u in enumerate(d.partner):
        if u != EMPTY:
            partner[flip(s)] = flip(u)
    return Diagram(n, tuple(partner))


_SWAP = {"r": "l", "l": "r", "t": "t", "p": "p"}


def star_word(w: Word) -> Word:
    return Word(w.n, tuple(GenSymbol(_SWAP[g.kind], g.index) for g in reversed(w.letters)))


# --- decomposition -------------------------------------------------------------


@dataclass(frozen=True)
class RTLTriple:
    r: Diagram
    t: Diagram
    l: Diagram  # noqa: E741

    def product(self) -> tuple[Diagram, int]:
        n = self.r.n
        a, k1 = compose(n, self.r.partner, self.t.partner)
        b, k2 = compose(n, a, self.l.partner)
        return Diagram(n, b), k1 + k2


def _rook(n: int, pairs: Sequence[tuple[int, int]]) -> Diagram:
    partner = [EMPTY] * (2 * n)
    for i, j in pairs:
        partner[i - 1], partner[n + j - 1] = n + j - 1, i - 1
    return Diagram(n, tuple(partner))


def shifted(d: Diagram) -> Diagram:
    """Slide the live vertices of each row to the left, keeping the edges.

    The result has live top vertices ``1..|tau(d)|`` and live bottom vertices
    ``1..|beta(d)|``.
    """
    n = d.n
    top_rank = {a: k for k, a in enumerate(sorted(tau(d)))}
    bot_rank = {b: k for k, b in enumerate(sorted(beta(d)))}

    def move(s: int) -> int:
        return top_rank[s + 1] if s < n else n + bot_rank[s - n + 1]

    partner = [EMPTY] * (2 * n)
    for s, u in enumerate(d.partner):
        if u != EMPTY:
            partner[move(s)] = move(u)
    return Diagram(n, tuple(partner))


def decompose(d: Diagram) -> RTLTriple:
    n = d.n
    top_live = sorted(tau(d))
    bot_live = sorted(beta(d))
    k, j = len(top_live), len(bot_live)
    rr = _rook(n, [(a, s + 1) for s, a in enumerate(top_live)])
    ll = _rook(n, [(s + 1, b) for s, b in enumerate(bot_live)])
    partner = list(shifted(d).partner)

    def join(a: int, b: int) -> None:
        partner[a], partner[b] = b, a

    if k <= j:
        # pair up the leftover top vertices k+1..j, then run verticals
        for m in range(k + 1, j, 2):
            join(m - 1, m)
        first = j + 1
    else:
        for m in range(j + 1, k, 2):
            join(n + m - 1, n + m)
        first = k + 1
    for m in range(first, n + 1):
        join(m - 1, n + m - 1)
    return RTLTriple(rr, Diagram(n, tuple(partner)), ll)


# --- planar rook factorizations -------------------------------------------------


def _r_run(a: int, b: int) -> list[GenSymbol]:
    # top a down to bottom b: r_{a-1} r_{a-2} ... r_b
    return [r(m) for m in range(a - 1, b - 1, -1)]


def factor_rp(d: Diagram) -> Word:
    """Word over ``r_i, p_i`` evaluating to a right planar rook diagram."""
    if not belongs(d, Monoid.RP):
        raise NotInRP(f"{d!r} is not a right planar rook diagram")
    letters: list[GenSymbol] = []
    for a, b in sorted(d.through_edges):
        letters += _r_run(a, b)
    letters += [p(i) for i in range(1, d.n + 1) if i not in beta(d)]
    return Word(d.n, tuple(letters))


def factor_lp(d: Diagram) -> Word:
    """Mirror of :func:`factor_rp`; the ``p`` block is kept in increasing order."""
    if not belongs(d, Monoid.LP):
        raise NotInRP(f"{d!r} is not a left planar rook diagram")
    n = d.n
    letters = [p(i) for i in range(1, n + 1) if i not in tau(d)]
    for a, b in sorted(d.through_edges, reverse=True):
        letters += [l(m) for m in range(a, b)]
    return Word(n, tuple(letters))


# --- ballot sequences -----------------------------------------------------------


@dataclass(frozen=True)
class BallotSequence:
    entries: tuple[int, ...]

    def __post_init__(self):
        e = self.entries
        if len(e) % 2 or len(e) < 2 or any(x not in (1, -1) for x in e):
            raise InvalidBallot(f"{e} is not an even-length +-1 sequence")
        total = 0
        for x in e:
            total += x
            if total < 0:
                raise InvalidBallot(f"{e} has a negative prefix sum")
        if total:
            raise InvalidBallot(f"{e} has unequal numbers of +1 and -1")

    @property
    def n(self) -> int:
        return len(self.entries) // 2 - 1


def rp_to_ballot(d: Diagram) -> BallotSequence:
    if not belongs(d, Monoid.RP):
        raise NotInRP(f"{d!r} is not a right planar rook diagram")
    pairs = sorted(d.through_edges) + [(d.n + 1, d.n + 1)]
    out: list[int] = []
    prev_a = prev_b = 0
    for a, b in pairs:
        out += [1] * (a - prev_a) + [-1] * (b - prev_b)
        prev_a, prev_b = a, b
    return BallotSequence(tuple(out))


def ballot_to_rp(s: BallotSequence | Sequence[int]) -> Diagram:
    if not isinstance(s, BallotSequence):
        s = BallotSequence(tuple(s))
    n = s.n
    if n < 1:
        raise InvalidBallot("sequence too short for a diagram")
    runs: list[int] = []
    prev = None
    for x in s.entries:
        if x == prev:
            runs[-1] += 1
        else:
            runs.append(1)
        prev = x
    pairs = []
    a = b = 0
    for up, down in zip(runs[::2], runs[1::2]):
        a, b = a + up, b + down
        pairs.append((a, b))
    # the last pair is the sentinel (n+1, n+1)
    return _rook(n, pairs[:-1])


def all_ballots(n: int):
    """Every ballot sequence of length ``2(n+1)``."""
    m = n + 1
    for ups in combinations(range(2 * m), m):
        seq = [-1] * (2 * m)
        for k in ups:
            seq[k] = 1
        try:
            yield BallotSequence(tuple(seq))
        except InvalidBallot:
            continue


# --- Temperley-Lieb standard form ----------------------------------------------


def tl_indices(d: Diagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The run starts ``i_1 < ... < i_p`` and run ends ``j_1 < ... < j_p``.

    Each top arc ``(a, b)`` contributes ``i = b - 1``, each bottom arc
    ``(a', b')`` contributes ``j = a``, and a through strand from top ``x`` to
    bottom ``y < x`` contributes ``i = x - 1`` and ``j = y``.
    """
    if not belongs(d, Monoid.TL):
        raise NotInTL(f"{d!r} has empty vertices")
    I, J = [], []
    for a, b in d.edges:
        if a.row is Row.TOP and b.row is Row.TOP:
            I.append(b.index - 1)
        elif a.row is Row.BOTTOM and b.row is Row.BOTTOM:
            J.append(min(a.index, b.index))
        elif a.index > b.index:
            I.append(a.index - 1)
            J.append(b.index)
    return tuple(sorted(I)), tuple(sorted(J))


def tl_runs_word(n: int, I: Sequence[int], J: Sequence[int]) -> Word:
    letters = [t(m) for i, j in zip(I, J) for m in range(i, j - 1, -1)]
    return Word(n, tuple(letters))


def is_tl_standard(w: Word) -> bool:
    """True if ``w`` is a product of descending t-runs with increasing starts and ends."""
    if any(g.kind != "t" for g in w.letters):
        return False
    runs: list[list[int]] = []
    for g in w.letters:
        if runs and g.index == runs[-1][-1] - 1:
            runs[-1].append(g.index)
        else:
            runs.append([g.index])
    I = [run[0] for run in runs]
    J = [run[-1] for run in runs]
    return all(a < b for a, b in zip(I, I[1:])) and all(a < b for a, b in zip(J, J[1:]))


def tl_standard_word(d: Diagram) -> tuple[Word, int]:
    I, J = tl_indices(d)
    return tl_runs_word(d.n, I, J), 0


def tl_standard_patterns(n: int):
    """All index patterns ``(I, J)`` of standard TL words on ``n`` strands."""
    for size in range(n):
        for I in combinations(range(1, n), size):
            for J in combinations(range(1, n), size):
                if all(j <= i for i, j in zip(I, J)):
                    yield I, J


# --- the five forms -------------------------------------------------------------


@dataclass(frozen=True)
class FiveForm:
    case: int
    before: Word
    middle: Word
    after: Word

    @property
    def word(self) -> Word:
        return self.before + self.middle + self.after


@lru_cache(maxsize=None)
def _tl_span(n: int, lo: int, hi: int) -> dict[tuple[int, ...], tuple[GenSymbol, ...]]:
    """Elements of the submonoid generated by ``t_lo..t_hi`` with a standard word each."""
    out: dict[tuple[int, ...], tuple[GenSymbol, ...]] = {}
    for I, J in tl_standard_patterns(n):
        letters = tl_runs_word(n, I, J).letters
        if all(lo <= g.index <= hi for g in letters):
            partner, _ = phi_letters(n, letters)
            out.setdefault(partner, letters)
    return out


def _alternating(start: int, stop: int) -> list[GenSymbol]:
    return [t(m) for m in range(start, stop + 1, 2)]


def tl_five_form(d: Diagram, v: VertexRef) -> FiveForm:
    """Factor ``d`` around the edge at bottom vertex ``v``.

    Returns the case number together with the outer factors found by search
    over the allowed submonoids and the explicit middle runs.
    """
    if not belongs(d, Monoid.TL):
        raise NotInTL(f"{d!r} has empty vertices")
    v = VertexRef.parse(v)
    if v.row is not Row.BOTTOM:
        raise ValueError("the five forms are phrased for a bottom vertex")
    n, i = d.n, v.index
    other = d.mate(v)
    j = other.index
    if other.row is Row.BOTTOM:
        if i < j:
            case, mid = 1, _alternating(i, j - 1) + _alternating(i + 1, j - 2)
            before, after = (1, n - 1), (i + 1, j - 2)
        else:
            case, mid = 2, _alternating(j, i - 1) + _alternating(j + 1, i - 2)
            before, after = (1, n - 1), (j + 1, i - 2)
    elif j < i:
        case, mid = 3, _alternating(j + 1, i - 1) + _alternating(j, i - 2)
        before, after = (j + 1, n - 1), (1, i - 2)
    elif j > i:
        case, mid = 4, _alternating(i, j - 2) + _alternating(i + 1, j - 1)
        before, after = (1, j - 2), (i + 1, n - 1)
    else:
        case, mid = 5, []
        before, after = (1, i - 2), (i + 1, n - 1)
    mid_p, _ = phi_letters(n, mid)
    lefts = _tl_span(n, *before)
    rights = _tl_span(n, *after)
    for a, wa in lefts.items():
        ap, _ = compose(n, a, mid_p)
        for b, wb in rights.items():
            if compose(n, ap, b)[0] == d.partner:
                return FiveForm(case, Word(n, wa), Word(n, tuple(mid)), Word(n, wb))
    raise NotInTL(f"no case-{case} factorization found for {d!r}")  # pragma: no cover


# --- standard words ---------------------------------------------------------------


@dataclass(frozen=True)
class StandardWord:
    r_part: Word
    t_part: Word
    l_part: Word

    @property
    def n(self) -> int:
        return self.r_part.n

    @property
    def word(self) -> Word:
        return self.r_part + self.t_part + self.l_part

    def __str__(self) -> str:
        return word_print(self.word)

    def to_json(self) -> dict:
        return {
            "r_part": word_print(self.r_part),
            "t_part": word_print(self.t_part),
            "l_part": word_print(self.l_part),
        }


def standard_word(d: Diagram) -> StandardWord:
    triple = decompose(d)
    tw, _ = tl_standard_word(triple.t)
    return StandardWord(factor_rp(triple.r), tw, factor_lp(triple.l))


def boundary_run(k: int, j: int) -> tuple[int, ...]:
    """Indices of the alternating t-run forced by unequal live counts."""
    lo, hi = min(k, j), max(k, j)
    return tuple(range(lo + 1, hi, 2))


def is_standard(sw: StandardWord) -> bool:
    """Shape check of a standard word, independent of how it was produced."""
    n = sw.n
    rl = sw.r_part.letters
    ll = sw.l_part.letters
    if not all(g.kind in "rp" for g in rl) or not all(g.kind in "lp" for g in ll):
        return False
    if not is_tl_standard(sw.t_part):
        return False
    d_r = Diagram(n, phi_letters(n, rl)[0])
    d_l = Diagram(n, phi_letters(n, ll)[0])
    if sorted(beta(d_r)) != list(range(1, len(beta(d_r)) + 1)):
        return False
    if sorted(tau(d_l)) != list(range(1, len(tau(d_l)) + 1)):
        return False
    if factor_rp(d_r).letters != rl or factor_lp(d_l).letters != ll:
        return False
    k, j = len(tau(d_r)), len(beta(d_l))
    if any(g.index >= max(k, j) for g in sw.t_part.letters):
        return False
    # the boundary run shows up as arcs of T on the row with fewer live vertices
    d_t = Diagram(n, phi_letters(n, sw.t_part.letters)[0])
    offset = 0 if k < j else n
    return all(d_t.partner[offset + m - 1] == offset + m for m in boundary_run(k, j))


def identity_standard(n: int) -> StandardWord:
    e = Word(n, ())
    return StandardWord(e, e, e)


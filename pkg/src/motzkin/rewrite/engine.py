"""Rewrite steps, traces, and a builder that applies catalog relations in place."""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from ..diagram import Monoid
from ..errors import RewriteMismatch
from ..relations import Relation, relation_catalog, supplement_catalog
from ..words import GenSymbol, Word, phi_letters, word_print

Letters = tuple[GenSymbol, ...]


class Direction(enum.Enum):
    LTOR = "LtoR"
    RTOL = "RtoL"

    def flip(self) -> "Direction":
        return Direction.RTOL if self is Direction.LTOR else Direction.LTOR


@dataclass(frozen=True, slots=True)
class RewriteStep:
    position: int
    rule: Relation
    direction: Direction

    @property
    def source(self) -> Letters:
        return self.rule.lhs.letters if self.direction is Direction.LTOR else self.rule.rhs.letters

    @property
    def target(self) -> Letters:
        return self.rule.rhs.letters if self.direction is Direction.LTOR else self.rule.lhs.letters

    def apply(self, letters: Letters) -> Letters:
        src, pos = self.source, self.position
        if letters[pos:pos + len(src)] != src:
            raise RewriteMismatch(f"{self.rule.name} does not match at position {pos}")
        return letters[:pos] + self.target + letters[pos + len(src):]

    def to_json(self) -> dict:
        return {"pos": self.position, "rule": self.rule.family_id, "dir": self.direction.value}


_STEPS: dict[tuple[int, int, bool], RewriteStep] = {}


def make_step(position: int, rule: Relation, direction: Direction) -> RewriteStep:
    """Shared step objects: long traces repeat the same few hundred steps."""
    # keyed on identity; the stored step keeps the rule alive, so ids are not reused
    key = (position, id(rule), direction is Direction.LTOR)
    st = _STEPS.get(key)
    if st is None:
        st = _STEPS[key] = RewriteStep(position, rule, direction)
    return st


@dataclass(frozen=True)
class RewriteTrace:
    start: Word
    steps: tuple[RewriteStep, ...]
    end: Word

    def replay(self) -> Word:
        cur = self.start.letters
        for st in self.steps:
            cur = st.apply(cur)
        return Word(self.start.n, cur)

    def verify(self, strict: bool = True) -> bool:
        """Replay reaches ``end``, every rule is known, and the image is unchanged.

        ``strict`` admits catalog rules only; otherwise supplement rules pass too.
        """
        n = self.start.n
        known = _rule_set(n) if strict else _rule_set(n) | frozenset(supplement_catalog(n))
        if any(st.rule not in known for st in self.steps):
            return False
        if self.replay() != self.end:
            return False
        a, _ = phi_letters(n, self.start.letters)
        b, _ = phi_letters(n, self.end.letters)
        return a == b

    @property
    def supplement_steps(self) -> int:
        known = _rule_set(self.start.n)
        return sum(st.rule not in known for st in self.steps)

    def json_lines(self) -> str:
        return "\n".join(json.dumps(st.to_json()) for st in self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def _all_relations(n: int) -> list[Relation]:
    out: list[Relation] = []
    for m in (Monoid.MOTZKIN, Monoid.P, Monoid.RP, Monoid.LP, Monoid.TL):
        out.extend(relation_catalog(m, n))
    return out


@lru_cache(maxsize=None)
def _rule_set(n: int) -> frozenset[Relation]:
    return frozenset(_all_relations(n))


@lru_cache(maxsize=None)
def rule_index(n: int) -> dict[Letters, tuple[tuple[Relation, Direction], ...]]:
    """Map each relation side to the (rule, direction) pairs rewriting it away."""
    idx: dict[Letters, list] = defaultdict(list)
    seen: set[tuple[Letters, Letters]] = set()
    for rel in _all_relations(n):
        for d, src, dst in ((Direction.LTOR, rel.lhs.letters, rel.rhs.letters),
                            (Direction.RTOL, rel.rhs.letters, rel.lhs.letters)):
            if (src, dst) in seen:
                continue
            seen.add((src, dst))
            idx[src].append((rel, d))
    return {k: tuple(v) for k, v in idx.items()}


@lru_cache(maxsize=None)
def rule_between(n: int, src: Letters, dst: Letters) -> tuple[Relation, Direction] | None:
    for rel, d in rule_index(n).get(src, ()):
        tgt = rel.rhs.letters if d is Direction.LTOR else rel.lhs.letters
        if tgt == dst:
            return rel, d
    return None


@lru_cache(maxsize=None)
def supplement_between(n: int, src: Letters, dst: Letters) -> tuple[Relation, Direction] | None:
    for rel in supplement_catalog(n):
        if (rel.lhs.letters, rel.rhs.letters) == (src, dst):
            return rel, Direction.LTOR
        if (rel.rhs.letters, rel.lhs.letters) == (src, dst):
            return rel, Direction.RTOL
    return None


@dataclass
class Chain:
    """A word being rewritten; every edit is recorded as a catalog step."""

    n: int
    letters: Letters
    steps: list[RewriteStep] = field(default_factory=list)
    start: Letters | None = None

    def __post_init__(self):
        self.letters = tuple(self.letters)
        if self.start is None:
            self.start = self.letters

    def step(self, pos: int, src: Sequence[GenSymbol], dst: Sequence[GenSymbol]) -> None:
        src, dst = tuple(src), tuple(dst)
        hit = rule_between(self.n, src, dst) or supplement_between(self.n, src, dst)
        if hit is None:
            raise RewriteMismatch(f"no catalog rule {word_print(Word(self.n, src))} -> "
                                  f"{word_print(Word(self.n, dst))}")
        st = make_step(pos, hit[0], hit[1])
        self.letters = st.apply(self.letters)
        self.steps.append(st)

    def splice(self, trace: RewriteTrace, pos: int) -> None:
        """Insert a derivation of the factor starting at ``pos``.

        Traces are only ever built by replaying their steps, so the factor is
        swapped for the trace's end word without replaying it again.
        """
        src = trace.start.letters
        if self.letters[pos:pos + len(src)] != src:
            raise RewriteMismatch("sub-derivation does not match the word")
        self.letters = self.letters[:pos] + trace.end.letters + self.letters[pos + len(src):]
        if pos == 0:
            self.steps.extend(trace.steps)
        else:
            self.steps.extend(make_step(st.position + pos, st.rule, st.direction) for st in trace.steps)

    def append_replayed(self, trace: RewriteTrace) -> None:
        """Splice at position 0 a trace that was already replayed when it was built."""
        src = trace.start.letters
        if self.letters[:len(src)] != src:
            raise RewriteMismatch("sub-derivation does not match the word")
        self.letters = trace.end.letters + self.letters[len(src):]
        self.steps.extend(trace.steps)

    def replace(self, pos: int, length: int, trace: RewriteTrace) -> None:
        if len(trace.start) != length:
            raise RewriteMismatch("sub-derivation length mismatch")
        self.splice(trace, pos)

    def trace(self) -> RewriteTrace:
        return RewriteTrace(Word(self.n, self.start), tuple(self.steps), Word(self.n, self.letters))


def identity_trace(w: Word) -> RewriteTrace:
    return RewriteTrace(w, (), w)


def reverse(trace: RewriteTrace) -> RewriteTrace:
    back = tuple(make_step(st.position, st.rule, st.direction.flip()) for st in reversed(trace.steps))
    return RewriteTrace(trace.end, back, trace.start)


def concat(a: RewriteTrace, b: RewriteTrace) -> RewriteTrace:
    if a.end != b.start:
        raise RewriteMismatch("traces do not meet")
    return RewriteTrace(a.start, a.steps + b.steps, b.end)


def shifted_letters(letters: Iterable[GenSymbol], by: int) -> Letters:
    return tuple(GenSymbol(g.kind, g.index + by) for g in letters)


def shift_trace(trace: RewriteTrace, by: int, n: int) -> RewriteTrace:
    """Translate every index by ``by`` and re-resolve each rule in width ``n``."""
    ch = Chain(n, shifted_letters(trace.start.letters, by))
    for st in trace.steps:
        ch.step(st.position, shifted_letters(st.source, by), shifted_letters(st.target, by))
    return ch.trace()


def star_letters(letters: Iterable[GenSymbol]) -> Letters:
    swap = {"r": "l", "l": "r", "t": "t", "p": "p"}
    return tuple(GenSymbol(swap[g.kind], g.index) for g in reversed(tuple(letters)))


def star_trace(trace: RewriteTrace) -> RewriteTrace:
    """Mirror a derivation under the top-bottom flip (reverses words, swaps r and l)."""
    n = trace.start.n
    cur = trace.start.letters
    ch = Chain(n, star_letters(cur))
    for st in trace.steps:
        m = len(st.source)
        pos, src, dst = len(cur) - st.position - m, star_letters(st.source), star_letters(st.target)
        if rule_between(n, src, dst) is not None:
            ch.step(pos, src, dst)
        else:
            # the mirror image of a catalog rule need not be catalogued itself
            from .search import prove
            ch.splice(prove(n, src, dst), pos)
        cur = st.apply(cur)
    return ch.trace()

"""Generator letters, words, and the evaluation map from words to diagrams."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .diagram import EMPTY, Diagram, ScaledDiagram, compose, identity
from .errors import InvalidLetter, ParseError

KINDS = "rltp"


class GenSymbol(NamedTuple):
    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    def valid_for(self, n: int) -> bool:
        if self.kind == "p":
            return 1 <= self.index <= n
        return self.kind in "rlt" and 1 <= self.index <= n - 1


def r(i: int) -> GenSymbol:
    return GenSymbol("r", i)


def l(i: int) -> GenSymbol:  # noqa: E743
    return GenSymbol("l", i)


def t(i: int) -> GenSymbol:
    return GenSymbol("t", i)


def p(i: int) -> GenSymbol:
    return GenSymbol("p", i)


@dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[GenSymbol, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidLetter(f"width must be positive, got {self.n}")
        for g in self.letters:
            if not isinstance(g, GenSymbol) or not g.valid_for(self.n):
                raise InvalidLetter(f"{g} is not a generator of width {self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise InvalidLetter("cannot concatenate words of different widths")
        return Word(self.n, self.letters + other.letters)

    def __str__(self) -> str:
        return word_print(self)


def word(n: int, letters: Iterable[GenSymbol] | str = ()) -> Word:
    if isinstance(letters, str):
        return word_parse(letters, n)
    return Word(n, tuple(letters))


_TOKEN = re.compile(r"^([rltp])(\d+)$")


def word_parse(text: str, n: int) -> Word:
    letters = []
    for tok in re.split(r"[\s*]+", text.strip()):
        if not tok or tok in ("e", "1"):
            continue
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"unrecognised token {tok!r}")
        g = GenSymbol(m.group(1), int(m.group(2)))
        if not g.valid_for(n):
            raise InvalidLetter(f"{g} is not a generator of width {n}")
        letters.append(g)
    return Word(n, tuple(letters))


def word_print(w: Word) -> str:
    return " ".join(map(str, w.letters)) if w.letters else "e"


@lru_cache(maxsize=None)
def _generator_partner(kind: str, i: int, n: int) -> tuple[int, ...]:
    partner = list(identity(n).partner)

    def cut(*slots):
        for s in slots:
            partner[s] = EMPTY

    def join(a, b):
        partner[a], partner[b] = b, a

    a, b = i - 1, i  # 0-based columns i and i+1
    if kind == "r":
        cut(a, n + a, b, n + b)
        join(b, n + a)
    elif kind == "l":
        cut(a, n + a, b, n + b)
        join(a, n + b)
    elif kind == "p":
        cut(a, n + a)
    elif kind == "t":
        join(a, b)
        join(n + a, n + b)
    return tuple(partner)


def generator_diagram(g: GenSymbol, n: int) -> Diagram:
    if not isinstance(g, GenSymbol) or not g.valid_for(n):
        raise InvalidLetter(f"{g} is not a generator of width {n}")
    return Diagram(n, _generator_partner(g.kind, g.index, n))


def phi_letters(n: int, letters: Iterable[GenSymbol]) -> tuple[tuple[int, ...], int]:
    """Fast path: partner table and loop count of a raw letter sequence."""
    partner = identity(n).partner
    loops = 0
    for g in letters:
        partner, k = compose(n, partner, _generator_partner(g.kind, g.index, n))
        loops += k
    return partner, loops


def phi(w: Word) -> ScaledDiagram:
    partner, loops = phi_letters(w.n, w.letters)
    return ScaledDiagram(Diagram(w.n, partner), loops)


def evaluate(w: Word) -> Diagram:
    return phi(w).diagram

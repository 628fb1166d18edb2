"""Machine-readable relation catalogs for P_n, RP_n, LP_n, TL_n and M_n.

Each family is instantiated at every admissible index, and every instance is
checked on diagrams before the catalog is returned.  ``x_power`` records the
number of loops the left side produces beyond the right side (``t_i t_i`` is
``x t_i``); for the monoids, where ``x = 1``, such relations identify the two
words while the count keeps the algebra information.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache

from .diagram import Monoid
from .errors import CatalogValidationFailure
from .words import GenSymbol, Word, phi_letters, word_print

L, R, T, P = "l", "r", "t", "p"


class Source(enum.Enum):
    PN_LIST = "PnList"
    RPN_THM = "RPnThm"
    LPN_DUAL = "LPnDual"
    TL_LIST = "TLList"
    MOTZKIN_THM = "MotzkinThm"
    DERIVED_LIST = "DerivedList"
    SUPPLEMENT = "Supplement"


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    family_id: str
    source: Source
    x_power: int = 0

    @property
    def name(self) -> str:
        return f"{self.family_id}: {word_print(self.lhs)} = {word_print(self.rhs)}"

    def to_json(self) -> dict:
        out = {"family": self.family_id, "lhs": word_print(self.lhs), "rhs": word_print(self.rhs)}
        if self.x_power:
            out["x_power"] = self.x_power
        return out

    def holds(self) -> bool:
        n = self.lhs.n
        a, la = phi_letters(n, self.lhs.letters)
        b, lb = phi_letters(n, self.rhs.letters)
        return a == b and la == lb + self.x_power


def _w(*letters) -> tuple[GenSymbol, ...]:
    return tuple(GenSymbol(k, i) for k, i in letters)


class _Builder:
    def __init__(self, n: int, source: Source):
        self.n = n
        self.source = source
        self.out: list[Relation] = []

    def ok(self, *words) -> bool:
        return all(GenSymbol(k, i).valid_for(self.n) for w in words for k, i in w)

    def add(self, family: str, lhs, rhs, x_power: int = 0) -> None:
        """Record ``lhs = rhs`` if every letter exists in width ``n``."""
        if not self.ok(lhs, rhs):
            return
        self.out.append(
            Relation(Word(self.n, _w(*lhs)), Word(self.n, _w(*rhs)), family, self.source, x_power)
        )

    def chain(self, family: str, *words) -> None:
        # a = b = c ... becomes the links a = b, b = c, ...
        for a, b in zip(words, words[1:]):
            self.add(family, a, b)

    def far_pairs(self, ordered: bool):
        n = self.n
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if abs(i - j) >= 2 and (ordered or i < j):
                    yield i, j


def _planar_rook_core(b: _Builder, prefix: str) -> None:
    """Relations 1-6 shared by the P_n and M_n presentations."""
    n = b.n
    for i in range(1, n):
        if prefix == "P":
            b.chain(f"{prefix}.1", [(L, i)] * 3, [(L, i)] * 2, [(R, i)] * 2, [(R, i)] * 3)
        else:
            b.chain(f"{prefix}.1", [(R, i)] * 3, [(R, i)] * 2, [(L, i)] * 2, [(L, i)] * 3)
        b.chain(f"{prefix}.2a", [(L, i), (L, i + 1), (L, i)], [(L, i), (L, i + 1)],
                [(L, i + 1), (L, i), (L, i + 1)])
        b.chain(f"{prefix}.2b", [(R, i), (R, i + 1), (R, i)], [(R, i + 1), (R, i)],
                [(R, i + 1), (R, i), (R, i + 1)])
        b.add(f"{prefix}.3a", [(R, i), (L, i), (R, i)], [(R, i)])
        b.add(f"{prefix}.3b", [(L, i), (R, i), (L, i)], [(L, i)])
        b.add(f"{prefix}.4a", [(L, i + 1), (R, i), (L, i)], [(L, i + 1), (R, i)])
        b.add(f"{prefix}.4b", [(R, i - 1), (L, i), (R, i)], [(R, i - 1), (L, i)])
        b.add(f"{prefix}.4c", [(R, i), (L, i), (R, i + 1)], [(L, i), (R, i + 1)])
        b.add(f"{prefix}.4d", [(L, i), (R, i), (L, i - 1)], [(R, i), (L, i - 1)])
        # the variant l_i r_i = l_{i+1} r_{i+1} fails on diagrams; both sides here equal p_{i+1}
        b.add(f"{prefix}.5", [(L, i), (R, i)], [(R, i + 1), (L, i + 1)])
    for i, j in b.far_pairs(ordered=True):
        b.add(f"{prefix}.6", [(R, i), (L, j)], [(L, j), (R, i)])
    for i, j in b.far_pairs(ordered=False):
        b.add(f"{prefix}.6", [(R, i), (R, j)], [(R, j), (R, i)])
        b.add(f"{prefix}.6", [(L, i), (L, j)], [(L, j), (L, i)])


def _rp(b: _Builder, prefix: str = "RP") -> None:
    n = b.n
    for i in range(1, n + 1):
        b.add(f"{prefix}.1", [(R, i), (R, i + 1), (R, i)], [(R, i + 1), (R, i), (R, i + 1)])
        b.chain(f"{prefix}.2", [(R, i)] * 2, [(R, i)] * 3, [(R, i), (P, i)], [(P, i), (P, i + 1)])
        b.chain(f"{prefix}.3", [(R, i)], [(P, i), (R, i)], [(R, i), (P, i + 1)])
        b.add(f"{prefix}.4", [(P, i), (R, i + 1)], [(R, i + 1), (P, i)])
        b.add(f"{prefix}.5", [(P, i), (P, i)], [(P, i)])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            b.add(f"{prefix}.6", [(P, i), (P, j)], [(P, j), (P, i)])
    for i, j in b.far_pairs(ordered=True):
        b.add(f"{prefix}.7", [(P, i), (R, j)], [(R, j), (P, i)])
    for i, j in b.far_pairs(ordered=False):
        b.add(f"{prefix}.7", [(R, i), (R, j)], [(R, j), (R, i)])


def _star_letters(w: tuple[GenSymbol, ...]) -> tuple[GenSymbol, ...]:
    swap = {"r": "l", "l": "r", "t": "t", "p": "p"}
    return tuple(GenSymbol(swap[g.kind], g.index) for g in reversed(w))


def _tl(b: _Builder, prefix: str = "TL") -> None:
    n = b.n
    for i, j in b.far_pairs(ordered=False):
        if j < n:
            b.add(f"{prefix}.1", [(T, i), (T, j)], [(T, j), (T, i)])
    for i in range(1, n):
        for j in (i - 1, i + 1):
            b.add(f"{prefix}.2", [(T, i), (T, j), (T, i)], [(T, i)])
        b.add(f"{prefix}.3", [(T, i), (T, i)], [(T, i)], x_power=1)


def _motzkin(b: _Builder) -> None:
    n = b.n
    _planar_rook_core(b, "M")
    for i, j in b.far_pairs(ordered=True):
        b.add("M.6", [(T, i), (R, j)], [(R, j), (T, i)])
        b.add("M.6", [(T, i), (L, j)], [(L, j), (T, i)])
    for i, j in b.far_pairs(ordered=False):
        b.add("M.6", [(T, i), (T, j)], [(T, j), (T, i)])
    for i in range(1, n):
        b.add("M.7", [(T, i), (T, i)], [(T, i)], x_power=1)
        for j in (i - 1, i + 1):
            b.add("M.8", [(T, i), (T, j), (T, i)], [(T, i)])
        b.add("M.9a", [(T, i), (L, i)], [(T, i), (R, i)])
        b.add("M.9b", [(L, i), (T, i)], [(R, i), (T, i)])
        b.add("M.10a", [(T, i), (R, i + 1)], [(T, i), (T, i + 1), (L, i)])
        b.add("M.10b", [(L, i + 1), (T, i)], [(R, i), (T, i + 1), (T, i)])
        b.add("M.11a", [(R, i), (R, i + 1), (T, i)], [(T, i + 1), (R, i), (R, i + 1)])
        b.add("M.11b", [(T, i), (L, i + 1), (L, i)], [(L, i + 1), (L, i), (T, i + 1)])
        b.add("M.12", [(T, i), (L, i), (T, i)], [(T, i)])


def _derived(b: _Builder) -> None:
    n = b.n
    for i in range(1, n + 1):
        b.add("D.1", [(R, i), (L, i)], [(P, i)])
        b.add("D.1", [(L, i - 1), (R, i - 1)], [(P, i)])
        b.chain("D.2", [(R, i)], [(P, i), (R, i)], [(R, i), (P, i + 1)])
        b.chain("D.3", [(L, i)], [(P, i + 1), (L, i)], [(L, i), (P, i)])
        b.chain("D.4", [(P, i), (L, i)], [(P, i + 1), (R, i)], [(P, i), (P, i + 1)])
        b.chain("D.5", [(T, i), (R, i)], [(T, i), (L, i)], [(T, i), (P, i)],
                [(T, i), (P, i + 1)], [(T, i), (P, i), (P, i + 1)])
        b.chain("D.6", [(R, i), (T, i)], [(L, i), (T, i)], [(P, i), (T, i)],
                [(P, i + 1), (T, i)], [(P, i), (P, i + 1), (T, i)])


def _validate(rels: list[Relation]) -> list[Relation]:
    bad = [rel.name for rel in rels if not rel.holds()]
    if bad:
        raise CatalogValidationFailure("; ".join(bad[:5]))
    return rels


@lru_cache(maxsize=None)
def _catalog(monoid: Monoid, n: int) -> tuple[Relation, ...]:
    if monoid is Monoid.P:
        b = _Builder(n, Source.PN_LIST)
        _planar_rook_core(b, "P")
        rels = b.out
    elif monoid is Monoid.RP:
        b = _Builder(n, Source.RPN_THM)
        _rp(b)
        rels = b.out
    elif monoid is Monoid.LP:
        rels = [
            Relation(Word(n, _star_letters(rel.lhs.letters)), Word(n, _star_letters(rel.rhs.letters)),
                     "LP" + rel.family_id[2:], Source.LPN_DUAL, rel.x_power)
            for rel in _catalog(Monoid.RP, n)
        ]
    elif monoid is Monoid.TL:
        b = _Builder(n, Source.TL_LIST)
        _tl(b)
        rels = b.out
    elif monoid is Monoid.MOTZKIN:
        b = _Builder(n, Source.MOTZKIN_THM)
        _motzkin(b)
        d = _Builder(n, Source.DERIVED_LIST)
        _derived(d)
        rels = b.out + d.out
    else:
        raise ValueError(f"no presentation catalogued for {monoid.value}")
    return tuple(_validate(rels))


def relation_catalog(monoid: Monoid, n: int) -> list[Relation]:
    if n < 1:
        raise ValueError("n must be positive")
    return list(_catalog(monoid, n))


@lru_cache(maxsize=None)
def _supplement(n: int) -> tuple[Relation, ...]:
    b = _Builder(n, Source.SUPPLEMENT)
    for i in range(1, n):
        b.add("S.1", [(P, i), (T, i), (P, i)], [(P, i), (P, i + 1)])
    return tuple(_validate(b.out))


def supplement_catalog(n: int) -> list[Relation]:
    """Diagram-true relations that the presentation cannot derive.

    Every catalogued relation mentioning ``t`` has ``t`` on both sides, so no
    word containing ``t`` rewrites to a ``t``-free word.  ``p_i t_i p_i =
    p_i p_{i+1}`` is the smallest identity that needs to cross that line.
    These relations are kept apart from ``relation_catalog``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return list(_supplement(n))


def catalog_json(monoid: Monoid, n: int) -> str:
    return json.dumps([rel.to_json() for rel in relation_catalog(monoid, n)], indent=1)

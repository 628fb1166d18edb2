"""Exhaustive generation of the diagram monoids and closed-form checks.

Every monoid except the rook monoid is produced as a sorted list of
:class:`~motzkin.diagram.Diagram`.  The rook monoid contains crossing diagrams,
which the planar ``Diagram`` type rejects, so it is generated as rook matrices
encoded by their partial injections (``row -> column or 0``).
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial
from typing import Iterator

import numpy as np

from .diagram import EMPTY, Diagram, Monoid, compose, identity, rank
from .errors import BoundExceeded
from .words import GenSymbol, generator_diagram

DEFAULT_BOUNDS = {Monoid.MOTZKIN: 8, Monoid.R: 8}
DEFAULT_BOUND = 10


def _check_bound(monoid: Monoid, n: int, bound: int | None) -> None:
    limit = bound if bound is not None else DEFAULT_BOUNDS.get(monoid, DEFAULT_BOUND)
    if n < 1 or n > limit:
        raise BoundExceeded(f"n={n} outside 1..{limit} for {monoid.value}")


def _boundary_order(n: int) -> list[int]:
    return list(range(n)) + list(range(2 * n - 1, n - 1, -1))


def _noncrossing(n: int, allow_empty: bool) -> Iterator[tuple[int, ...]]:
    """Scan the boundary circle once, keeping open arcs on a stack."""
    order = _boundary_order(n)
    partner = [EMPTY] * (2 * n)
    stack: list[int] = []
    size = len(order)

    def rec(k: int):
        if len(stack) > size - k:
            return
        if k == size:
            if not stack:
                yield tuple(partner)
            return
        s = order[k]
        if allow_empty:
            yield from rec(k + 1)
        stack.append(s)
        yield from rec(k + 1)
        stack.pop()
        if stack:
            u = stack.pop()
            partner[s], partner[u] = u, s
            yield from rec(k + 1)
            partner[s] = partner[u] = EMPTY
            stack.append(u)

    yield from rec(0)


def _planar_rook(n: int, keep) -> Iterator[tuple[int, ...]]:
    # a planar rook diagram is fixed by its top and bottom supports
    for k in range(n + 1):
        for a in combinations(range(n), k):
            for b in combinations(range(n), k):
                if not keep(a, b):
                    continue
                partner = [EMPTY] * (2 * n)
                for i, j in zip(a, b):
                    partner[i], partner[n + j] = n + j, i
                yield tuple(partner)


def _rook_injections(n: int) -> Iterator[tuple[int, ...]]:
    row = [0] * n
    used = [False] * (n + 1)

    def rec(i: int):
        if i == n:
            yield tuple(row)
            return
        row[i] = 0
        yield from rec(i + 1)
        for j in range(1, n + 1):
            if not used[j]:
                used[j] = True
                row[i] = j
                yield from rec(i + 1)
                used[j] = False
        row[i] = 0

    yield from rec(0)


def injection_to_matrix(f: tuple[int, ...]) -> np.ndarray:
    n = len(f)
    m = np.zeros((n, n), dtype=np.int64)
    for i, j in enumerate(f):
        if j:
            m[i, j - 1] = 1
    return m


def enumerate_monoid(monoid: Monoid, n: int, bound: int | None = None) -> list:
    """All elements of ``monoid`` on ``n`` strands, sorted.

    Rook-monoid elements are returned as partial-injection tuples; everything
    else as :class:`Diagram`.
    """
    _check_bound(monoid, n, bound)
    if monoid is Monoid.R:
        return sorted(_rook_injections(n))
    if monoid is Monoid.MOTZKIN:
        tables = _noncrossing(n, allow_empty=True)
    elif monoid is Monoid.TL:
        tables = _noncrossing(n, allow_empty=False)
    elif monoid is Monoid.P:
        tables = _planar_rook(n, lambda a, b: True)
    elif monoid is Monoid.RP:
        tables = _planar_rook(n, lambda a, b: all(i >= j for i, j in zip(a, b)))
    elif monoid is Monoid.LP:
        tables = _planar_rook(n, lambda a, b: all(i <= j for i, j in zip(a, b)))
    else:  # pragma: no cover
        raise ValueError(monoid)
    return sorted(Diagram(n, tb) for tb in tables)


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def closed_form(monoid: Monoid, n: int) -> int | None:
    if monoid is Monoid.R:
        return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
    if monoid is Monoid.P:
        return sum(comb(n, k) ** 2 for k in range(n + 1))
    if monoid in (Monoid.RP, Monoid.LP):
        return comb(2 * n + 2, n + 1) // (n + 2)
    if monoid is Monoid.TL:
        return catalan(n)
    return None


def generators(monoid: Monoid, n: int) -> list[GenSymbol]:
    """Generator letters used for the closure check.

    ``p_i`` is included for P_n and M_n: for ``n = 1`` there are no r, l or t
    letters at all, and for larger ``n`` it is a product of r's and l's anyway.
    """
    rs = [GenSymbol("r", i) for i in range(1, n)]
    ls = [GenSymbol("l", i) for i in range(1, n)]
    ts = [GenSymbol("t", i) for i in range(1, n)]
    ps = [GenSymbol("p", i) for i in range(1, n + 1)]
    return {
        Monoid.P: rs + ls + ps,
        Monoid.RP: rs + ps,
        Monoid.LP: ls + ps,
        Monoid.TL: ts,
        Monoid.MOTZKIN: ts + rs + ls + ps,
    }[monoid]


def _rook_closure(n: int) -> set[tuple[int, ...]]:
    def mul(f, g):
        return tuple(g[j - 1] if j else 0 for j in f)

    gens = []
    for i in range(n - 1):
        s = list(range(1, n + 1))
        s[i], s[i + 1] = s[i + 1], s[i]
        gens.append(tuple(s))
    gens.append(tuple([0] + list(range(2, n + 1))))
    start = tuple(range(1, n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for g in gens:
            h = mul(f, g)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen


def generator_closure(monoid: Monoid, n: int, bound: int | None = None) -> set:
    """Breadth-first closure of the identity under right multiplication by generators."""
    _check_bound(monoid, n, bound)
    if monoid is Monoid.R:
        return _rook_closure(n)
    gens = [generator_diagram(g, n).partner for g in generators(monoid, n)]
    start = identity(n).partner
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt, _ = compose(n, cur, g)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return {Diagram(n, tb) for tb in seen}


@dataclass
class EnumerationReport:
    monoid: Monoid
    n: int
    count: int
    closed_form: int | None
    by_rank: dict[int, int] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        ok = sum(self.by_rank.values()) == self.count
        return ok and (self.closed_form is None or self.closed_form == self.count)


def report(monoid: Monoid, n: int, bound: int | None = None) -> EnumerationReport:
    items = enumerate_monoid(monoid, n, bound)
    if monoid is Monoid.R:
        ranks = Counter(sum(1 for j in f if j) for f in items)
    else:
        ranks = Counter(rank(d) for d in items)
    return EnumerationReport(monoid, n, len(items), closed_form(monoid, n), dict(sorted(ranks.items())))

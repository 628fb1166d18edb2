"""Planar partial matchings on two rows of ``n`` vertices.

A :class:`Diagram` stores, for each of the ``2n`` vertices, the vertex it is
joined to (or ``-1`` when the vertex is empty).  Top vertex ``i`` (1-based) has
slot ``i - 1`` and bottom vertex ``i`` has slot ``n + i - 1``.  Because the
partner table is fully determined by the edge set, structural equality of two
diagrams coincides with equality of the underlying matchings, and diagrams can
be used directly as dictionary keys.

Multiplication stacks the first factor on top of the second.  Closed loops
formed in the middle row are removed and counted; open middle paths (both ends
on empty vertices) vanish without a trace.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    CrossingEdges,
    DegreeViolation,
    IndexOutOfRange,
    NotARookDiagram,
    NotARookMatrix,
    ParseError,
    WidthMismatch,
)

EMPTY = -1


class Row(enum.Enum):
    TOP = "t"
    BOTTOM = "b"


class VertexRef(NamedTuple):
    row: Row
    index: int

    def __str__(self) -> str:
        return f"{self.row.value}{self.index}"

    @classmethod
    def parse(cls, token) -> "VertexRef":
        if isinstance(token, VertexRef):
            return token
        if isinstance(token, tuple) and len(token) == 2:
            row, index = token
            row = row if isinstance(row, Row) else Row(str(row))
            return cls(row, int(index))
        text = str(token).strip()
        if len(text) < 2 or text[0] not in "tb" or not text[1:].isdigit():
            raise ParseError(f"bad vertex token {token!r}")
        return cls(Row(text[0]), int(text[1:]))


def top(i: int) -> VertexRef:
    return VertexRef(Row.TOP, i)


def bot(i: int) -> VertexRef:
    return VertexRef(Row.BOTTOM, i)


class Monoid(enum.Enum):
    R = "r"
    P = "p"
    RP = "rp"
    LP = "lp"
    TL = "tl"
    MOTZKIN = "motzkin"


class Membership(enum.Flag):
    NONE = 0
    IN_ROOK = enum.auto()
    IN_PLANAR_ROOK = enum.auto()
    IN_RP = enum.auto()
    IN_LP = enum.auto()
    IN_TL = enum.auto()
    IN_MOTZKIN = enum.auto()


@dataclass(frozen=True, order=True)
class Diagram:
    n: int
    partner: tuple[int, ...]

    def __repr__(self) -> str:
        body = ", ".join(f"({a},{b})" for a, b in self.edges)
        return f"Diagram(n={self.n}, {{{body}}})"

    # --- vertex bookkeeping -------------------------------------------------

    def slot(self, v: VertexRef) -> int:
        return v.index - 1 if v.row is Row.TOP else self.n + v.index - 1

    def vertex(self, slot: int) -> VertexRef:
        if slot < self.n:
            return top(slot + 1)
        return bot(slot - self.n + 1)

    def mate(self, v: VertexRef) -> VertexRef | None:
        s = self.partner[self.slot(v)]
        return None if s == EMPTY else self.vertex(s)

    @property
    def edges(self) -> tuple[tuple[VertexRef, VertexRef], ...]:
        out = []
        for s, u in enumerate(self.partner):
            if u > s:
                out.append((self.vertex(s), self.vertex(u)))
        return tuple(out)

    @property
    def through_edges(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(i, j)`` for every edge joining top ``i`` to bottom ``j``."""
        n = self.n
        return tuple(
            (s + 1, u - n + 1) for s, u in enumerate(self.partner[:n]) if u >= n
        )

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[str(a), str(b)] for a, b in self.edges]}

    def __mul__(self, other: "Diagram") -> "Diagram":
        return multiply(self, other).diagram


class ScaledDiagram(NamedTuple):
    diagram: Diagram
    loops: int


def _crosses(n: int, partner: Sequence[int]) -> bool:
    # boundary order t1..tn, bn..b1; a matching is planar iff it nests like brackets
    order = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    pos = {s: k for k, s in enumerate(order)}
    stack = []
    for s in order:
        u = partner[s]
        if u == EMPTY:
            continue
        if pos[u] > pos[s]:
            stack.append(s)
        elif not stack or stack.pop() != u:
            return True
    return False


def _from_partner(n: int, partner: Sequence[int], check: bool = True) -> Diagram:
    partner = tuple(partner)
    if check and _crosses(n, partner):
        raise CrossingEdges(f"edges cross in {partner}")
    return Diagram(n, partner)


def make_diagram(n: int, edges: Iterable) -> Diagram:
    """Validate ``edges`` and build the diagram of width ``n``.

    Each edge is a pair of vertex tokens: :class:`VertexRef`, ``("t", 3)`` or
    the string form ``"t3"``/``"b1"``.
    """
    if n < 1:
        raise IndexOutOfRange(f"width must be positive, got {n}")
    partner = [EMPTY] * (2 * n)
    for edge in edges:
        a, b = (VertexRef.parse(x) for x in edge)
        for v in (a, b):
            if not 1 <= v.index <= n:
                raise IndexOutOfRange(f"vertex {v} outside 1..{n}")
        sa = a.index - 1 if a.row is Row.TOP else n + a.index - 1
        sb = b.index - 1 if b.row is Row.TOP else n + b.index - 1
        if sa == sb:
            raise DegreeViolation(f"self-loop at {a}")
        for s, v in ((sa, a), (sb, b)):
            if partner[s] != EMPTY:
                raise DegreeViolation(f"vertex {v} used twice")
        partner[sa], partner[sb] = sb, sa
    return _from_partner(n, partner)


def identity(n: int) -> Diagram:
    return Diagram(n, tuple(list(range(n, 2 * n)) + list(range(n))))


def empty(n: int) -> Diagram:
    return Diagram(n, (EMPTY,) * (2 * n))


def diagram_from_json(obj) -> Diagram:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        return make_diagram(int(obj["n"]), obj["edges"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad diagram JSON: {exc}") from exc


def compose(n: int, p1: Sequence[int], p2: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Stack partner table ``p1`` over ``p2``; return the product table and loop count."""
    out = [EMPTY] * (2 * n)
    seen = [False] * n  # middle row

    def walk(s: int) -> int:
        # s is an exterior slot; follow the path until it exits or dies
        if s < n:
            u = p1[s]
            if u == EMPTY:
                return EMPTY
            if u < n:
                return u
            m = u - n
            side = 2  # next hop is through p2, entering at its top m
        else:
            u = p2[s]
            if u == EMPTY:
                return EMPTY
            if u >= n:
                return u
            m = u
            side = 1  # next hop through p1 bottom m
        while True:
            seen[m] = True
            if side == 2:
                u = p2[m]
                if u == EMPTY:
                    return EMPTY
                if u >= n:
                    return u
                m, side = u, 1
            else:
                u = p1[n + m]
                if u == EMPTY:
                    return EMPTY
                if u < n:
                    return u
                m, side = u - n, 2
            seen[m] = True

    for s in range(2 * n):
        if out[s] != EMPTY:
            continue
        u = walk(s)
        if u != EMPTY:
            out[s], out[u] = u, s

    # open middle paths start at a middle vertex that is free on one side
    for m in range(n):
        if seen[m]:
            continue
        if p1[n + m] == EMPTY or p2[m] == EMPTY:
            seen[m] = True
            side = 2 if p1[n + m] == EMPTY else 1
            cur = m
            while True:
                u = p2[cur] if side == 2 else p1[n + cur]
                if u == EMPTY or (side == 2 and u >= n) or (side == 1 and u < n):
                    break
                cur = u if side == 2 else u - n
                if seen[cur]:
                    break
                seen[cur] = True
                side = 1 if side == 2 else 2

    loops = 0
    for m in range(n):
        if seen[m]:
            continue
        loops += 1
        cur, side = m, 2
        while not seen[cur]:
            seen[cur] = True
            u = p2[cur] if side == 2 else p1[n + cur]
            cur = u if side == 2 else u - n
            side = 1 if side == 2 else 2
    return tuple(out), loops


def multiply(d1: Diagram, d2: Diagram) -> ScaledDiagram:
    if d1.n != d2.n:
        raise WidthMismatch(f"cannot stack width {d1.n} over width {d2.n}")
    partner, loops = compose(d1.n, d1.partner, d2.partner)
    return ScaledDiagram(Diagram(d1.n, partner), loops)


def tau(d: Diagram) -> frozenset[int]:
    return frozenset(i + 1 for i in range(d.n) if d.partner[i] != EMPTY)


def beta(d: Diagram) -> frozenset[int]:
    n = d.n
    return frozenset(i + 1 for i in range(n) if d.partner[n + i] != EMPTY)


def rank(d: Diagram) -> int:
    return sum(1 for s, u in enumerate(d.partner) if u > s)


def membership(d: Diagram) -> Membership:
    flags = Membership.IN_MOTZKIN
    through = d.through_edges
    if 2 * len(through) == sum(1 for u in d.partner if u != EMPTY):
        flags |= Membership.IN_ROOK | Membership.IN_PLANAR_ROOK
        if all(i >= j for i, j in through):
            flags |= Membership.IN_RP
        if all(i <= j for i, j in through):
            flags |= Membership.IN_LP
    if EMPTY not in d.partner:
        flags |= Membership.IN_TL
    return flags


_FLAG_FOR = {
    Monoid.R: Membership.IN_ROOK,
    Monoid.P: Membership.IN_PLANAR_ROOK,
    Monoid.RP: Membership.IN_RP,
    Monoid.LP: Membership.IN_LP,
    Monoid.TL: Membership.IN_TL,
    Monoid.MOTZKIN: Membership.IN_MOTZKIN,
}


def belongs(d: Diagram, monoid: Monoid) -> bool:
    return bool(membership(d) & _FLAG_FOR[monoid])


def to_matrix(d: Diagram) -> np.ndarray:
    if not belongs(d, Monoid.R):
        raise NotARookDiagram("diagram has horizontal edges")
    m = np.zeros((d.n, d.n), dtype=np.int64)
    for i, j in d.through_edges:
        m[i - 1, j - 1] = 1
    return m


def is_rook_matrix(m) -> bool:
    m = np.asarray(m)
    return (
        m.ndim == 2
        and m.shape[0] == m.shape[1]
        and bool(np.isin(m, (0, 1)).all())
        and bool((m.sum(axis=0) <= 1).all())
        and bool((m.sum(axis=1) <= 1).all())
    )


def from_matrix(m) -> Diagram:
    m = np.asarray(m)
    if not is_rook_matrix(m) or m.shape[0] == 0:
        raise NotARookMatrix("need a square 0/1 matrix with at most one 1 per row and column")
    rows, cols = np.nonzero(m)
    return make_diagram(m.shape[0], [(top(int(i) + 1), bot(int(j) + 1)) for i, j in zip(rows, cols)])


def render(d: Diagram) -> str:
    """ASCII picture: incident vertices are filled, empty ones hollow."""
    n = d.n
    row_t = " ".join("●" if d.partner[i] != EMPTY else "○" for i in range(n))
    row_b = " ".join("●" if d.partner[n + i] != EMPTY else "○" for i in range(n))
    edges = " ".join(f"{a}-{b}" for a, b in d.edges) or "(no edges)"
    return f"{row_t}\n{row_b}\nedges: {edges}"

"""Independent reference implementations used by the tests."""

from __future__ import annotations

from itertools import combinations
from math import comb, factorial


def glue(n: int, upper: tuple[int, ...], lower: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Stack two partner tables as a graph and read off paths and loops by walking it."""
    # nodes: ('u', s) for upper slots, ('l', s) for lower slots; middle row joins upper bottom to lower top
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for tag, tb in (("u", upper), ("l", lower)):
        for s, q in enumerate(tb):
            adj.setdefault((tag, s), [])
            if q > s:
                link((tag, s), (tag, q))
    for i in range(n):
        link(("u", n + i), ("l", i))
    outer = [("u", i) for i in range(n)] + [("l", n + i) for i in range(n)]
    slot = {v: k for k, v in enumerate(outer)}
    out = [-1] * (2 * n)
    seen = set()
    for v in outer:
        if v in seen:
            continue
        prev, cur = None, v
        seen.add(cur)
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt or (prev is not None and cur in slot):
                break
            prev, cur = cur, nxt[0]
            seen.add(cur)
        if cur != v and cur in slot:
            out[slot[v]], out[slot[cur]] = slot[cur], slot[v]
    loops = 0
    for v in adj:
        if v in seen or len(adj[v]) != 2:
            continue
        # every vertex on a closed component has degree two
        stack = [v]
        comp = []
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            comp.append(x)
            stack.extend(adj[x])
        if all(len(adj[x]) == 2 for x in comp):
            loops += 1
    return tuple(out), loops


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def motzkin_monoid_size(n: int) -> int:
    """Noncrossing partial matchings of 2n points on a line: the Motzkin number M_{2n}."""
    m = 2 * n
    return sum(comb(m, 2 * k) * catalan(k) for k in range(m // 2 + 1))


def rook_size(n: int) -> int:
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def planar_rook_size(n: int) -> int:
    return sum(comb(n, k) ** 2 for k in range(n + 1))


def right_planar_brute(n: int) -> int:
    """Order-preserving partial bijections ``a_i -> b_i`` with ``a_i >= b_i``."""
    count = 0
    for k in range(n + 1):
        for tops in combinations(range(1, n + 1), k):
            for bots in combinations(range(1, n + 1), k):
                count += all(a >= b for a, b in zip(tops, bots))
    return count

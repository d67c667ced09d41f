"""Exact r-clique counting by ordered bitset extension."""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph

COUNT_BITS = 128
_COUNT_LIMIT = 1 << COUNT_BITS


class CliqueCountOverflowError(OverflowError):
    """Clique count exceeds the 128-bit counter contract."""


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in degeneracy order (repeatedly remove a min-degree vertex).

    Ties break on the smallest label, so the order is deterministic.
    """
    n = g.n
    alive = (1 << n) - 1
    degs = [g.degree(v) for v in range(n)]
    order = []
    for _ in range(n):
        best = -1
        best_deg = n + 1
        m = alive
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if degs[v] < best_deg:
                best_deg = degs[v]
                best = v
        order.append(best)
        alive ^= 1 << best
        m = g.row(best) & alive
        while m:
            b = m & -m
            m ^= b
            degs[b.bit_length() - 1] -= 1
    return order


def count_cliques(g: Graph, r: int) -> int:
    """Exact number of r-vertex cliques.

    Recursion extends partial cliques in increasing position of a degeneracy
    order; the candidate set is the bit-intersection of forward neighborhoods,
    so each clique is generated exactly once.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    n = g.n
    if r > n:
        return 0
    if r == 1:
        return n
    if r == 2:
        return g.edge_count()

    order = degeneracy_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # forward[i] = neighbors of order[i] that come later in the order
    forward = [0] * n
    for v in range(n):
        i = pos[v]
        m = g.row(v)
        fw = 0
        while m:
            b = m & -m
            m ^= b
            j = pos[b.bit_length() - 1]
            if j > i:
                fw |= 1 << j
        forward[i] = fw

    def extend(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        if cand.bit_count() < need:
            return 0
        total = 0
        m = cand
        while m:
            b = m & -m
            m ^= b
            total += extend(forward[b.bit_length() - 1] & cand, need - 1)
        return total

    total = extend((1 << n) - 1, r)
    if total >= _COUNT_LIMIT:
        raise CliqueCountOverflowError(
            f"clique count exceeds {COUNT_BITS}-bit limit"
        )
    return total


def oracle_count_cliques(g: Graph, r: int) -> int:
    """Brute force over all C(n, r) vertex subsets; test oracle, n <= 16."""
    if g.n > 16:
        raise ValueError("oracle limited to n <= 16")
    if r < 1:
        raise ValueError("r must be >= 1")
    count = 0
    for subset in combinations(range(g.n), r):
        if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
            count += 1
    return count

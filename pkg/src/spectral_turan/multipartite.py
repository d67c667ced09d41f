"""Search for complete r-partite subgraphs inside a host graph.

A witness is a family of pairwise-disjoint vertex classes with every
cross-class pair adjacent.  Classes need not be independent inside the
host: the target is a subgraph, not an induced one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, part_sizes

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(Exception):
    """Exhaustive search ran out of node expansions; result is indeterminate."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} node expansions exhausted")
        self.budget = budget


@dataclass(frozen=True)
class MultipartiteWitness:
    """Vertex classes, in search order, demonstrating a complete r-partite subgraph."""

    parts: tuple[tuple[int, ...], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def to_lists(self) -> list[list[int]]:
        """Serialization used in reports: list of lists, part order as searched."""
        return [list(p) for p in self.parts]


def verify_witness(g: Graph, witness: MultipartiteWitness) -> bool:
    """True iff parts are disjoint, in range, and all cross pairs are edges."""
    seen = 0
    for p in witness.parts:
        for v in p:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
            if seen >> v & 1:
                return False
            seen |= 1 << v
    for pa, pb in combinations(witness.parts, 2):
        for u in pa:
            row = g.row(u)
            for v in pb:
                if not row >> v & 1:
                    return False
    return True


def find_complete_multipartite(
    g: Graph,
    sizes,
    budget: int = DEFAULT_BUDGET,
) -> MultipartiteWitness | None:
    """Exhaustive backtracking search for a complete multipartite subgraph.

    Parts are built in nonincreasing size order, vertices tried in ascending
    label order, so a returned witness is the lexicographically least one.
    Candidates for a new vertex are the bit-intersection of the neighborhoods
    of everything placed in *other* parts; a part is pruned when the
    candidates above its last vertex cannot fill the remaining slots.
    Consecutive equal-size parts are forced to ascend by first element,
    which removes permutation-equivalent branches without losing witnesses.

    Returns a witness, or None after exhausting the space.  Raises
    SearchBudgetExceeded when the budget runs out first: an indeterminate
    outcome, deliberately distinct from None.
    """
    szs = part_sizes(sizes)
    if sum(szs) > g.n:
        raise ValueError("total part size exceeds host order")
    r = len(szs)
    n = g.n
    full = (1 << n) - 1
    rows = [g.row(v) for v in range(n)]
    parts: list[list[int]] = [[] for _ in range(r)]
    expansions = 0

    # cross[j] = bit-intersection of neighborhoods of all placed vertices
    # outside part j; cand = remaining candidates for the current part,
    # always a subset of cross[pi] & ~used above the part's last vertex.
    def search(pi: int, slot: int, cand: int, cross: list[int], used: int) -> bool:
        nonlocal expansions
        if slot == szs[pi]:
            ni = pi + 1
            if ni == r:
                return True
            ncand = cross[ni] & ~used
            if szs[ni] == szs[pi]:
                # equal-size parts ascend by first element (pure symmetry cut)
                ncand &= -(1 << (parts[pi][0] + 1))
            return search(ni, 0, ncand, cross, used)
        need = szs[pi] - slot
        m = cand
        while m:
            if m.bit_count() < need:
                return False
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            expansions += 1
            if expansions > budget:
                raise SearchBudgetExceeded(budget)
            row_v = rows[v]
            ncross = [c if j == pi else c & row_v for j, c in enumerate(cross)]
            nused = used | b
            if any(
                (ncross[j] & ~nused).bit_count() < szs[j] for j in range(pi + 1, r)
            ):
                continue
            parts[pi].append(v)
            if search(pi, slot + 1, m, ncross, nused):
                return True
            parts[pi].pop()
        return False

    if search(0, 0, full, [full] * r, 0):
        return MultipartiteWitness(tuple(tuple(p) for p in parts))
    return None


@dataclass(frozen=True)
class BicliqueResult:
    """Largest balanced biclique side found; exact=False means budget ran out."""

    side: int
    exact: bool
    witness: MultipartiteWitness | None


def max_balanced_biclique(g: Graph, budget: int = DEFAULT_BUDGET) -> BicliqueResult:
    """Largest s with a K_2(s, s) subgraph, by increasing exhaustive probes.

    Existence of K_2(s, s) is monotone decreasing in s, so the scan stops at
    the first absent size.  A budget exhaustion yields a lower bound flagged
    inexact rather than a claim of absence.
    """
    if g.n < 2:
        raise ValueError("max_balanced_biclique requires n >= 2")
    best = 0
    best_witness: MultipartiteWitness | None = None
    s = 1
    while 2 * s <= g.n:
        try:
            found = find_complete_multipartite(g, (s, s), budget=budget)
        except SearchBudgetExceeded:
            return BicliqueResult(best, False, best_witness)
        if found is None:
            return BicliqueResult(best, True, best_witness)
        best = s
        best_witness = found
        s += 1
    return BicliqueResult(best, True, best_witness)

"""Checkable forms of the spectral/clique/multipartite inequality chain.

Every checker consumes certified eigenvalue intervals and exact integer
clique counts, and emits a structured report.  A VIOLATION verdict is
reserved for inequalities that fail at every point of every certified
interval; budget or precision shortfalls surface as ``indeterminate``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .cliques import count_cliques
from .graphs import Graph, part_sizes, turan_part_sizes
from .multipartite import (
    DEFAULT_BUDGET,
    MultipartiteWitness,
    SearchBudgetExceeded,
    find_complete_multipartite,
    verify_witness,
)
from .spectral import DEFAULT_TOL, SpectralEstimate, quotient_mu_multipartite, spectral_radius

EPS = 1e-9


class Verdict(str, Enum):
    CONFIRMED = "confirmed"
    VACUOUS = "vacuous"
    INDETERMINATE = "indeterminate"
    VIOLATION = "VIOLATION"


@dataclass
class TheoremReport:
    """Outcome of one checker applied to one instance."""

    instance_id: str
    check: str
    params: dict
    hypothesis_satisfied: bool
    verdict: Verdict
    mu: SpectralEstimate | None = None
    kr: int | None = None
    quantities: dict = field(default_factory=dict)
    witness: MultipartiteWitness | None = None
    notes: str = ""

    def to_dict(self) -> dict:
        d: dict = {
            "id": self.instance_id,
            "subcommand": self.check,
            "params": self.params,
            "mu": None
            if self.mu is None
            else {"value": self.mu.value, "residual": self.mu.residual},
            "kr": self.kr,
            "verdict": self.verdict.value,
            "notes": self.notes,
        }
        if self.witness is not None:
            d["witness"] = self.witness.to_lists()
        if self.quantities:
            d["quantities"] = self.quantities
        return d


def _c_range_note(r: int, c: float) -> str:
    if r >= 2 and not 0.0 < c < 1.0 / (r - 1):
        return (
            f"c={c} outside (0, 1/(r-1)) = (0, {1.0 / (r - 1):.6g}); "
            "spectral hypothesis unsatisfiable"
        )
    return ""


# ---------------------------------------------------------------------------
# clique lower bound from the spectral radius
# ---------------------------------------------------------------------------

def fact1_rhs(n: int, r: int, mu: float) -> float:
    """Clique-count lower bound (mu/n - 1 + 1/r) * r(r-1)/(r+1) * (n/r)^r.

    May be negative, in which case the bound is vacuously true.
    """
    if n < 1 or r < 2:
        raise ValueError("need n >= 1 and r >= 2")
    return (mu / n - 1.0 + 1.0 / r) * (r * (r - 1) / (r + 1)) * (n / r) ** r


def fact1_check(
    g: Graph,
    r: int,
    tol: float = DEFAULT_TOL,
    instance_id: str = "",
) -> TheoremReport:
    """Check k_r >= clique lower bound at the spectral radius.

    The bound is increasing in mu, so it is evaluated at the certified lower
    interval end: confirmed means the inequality holds somewhere in the
    interval, VIOLATION that it fails everywhere (it never does).
    """
    if r < 2:
        raise ValueError("fact1 requires r >= 2")
    if g.n < 1:
        raise ValueError("fact1 requires n >= 1")
    mu = spectral_radius(g, tol)
    kr = count_cliques(g, r)
    params = {"n": g.n, "r": r}
    if not mu.converged:
        return TheoremReport(
            instance_id, "fact1", params, True, Verdict.INDETERMINATE,
            mu=mu, kr=kr, notes="eigenvalue iteration did not converge",
        )
    rhs_lo = fact1_rhs(g.n, r, mu.lower)
    rhs_hi = fact1_rhs(g.n, r, mu.upper)
    verdict = Verdict.CONFIRMED if kr >= rhs_lo - EPS else Verdict.VIOLATION
    return TheoremReport(
        instance_id, "fact1", params, True, verdict,
        mu=mu, kr=kr, quantities={"rhs_low": rhs_lo, "rhs_high": rhs_hi},
    )


# ---------------------------------------------------------------------------
# main theorem: spectral hypothesis forces a large complete r-partite subgraph
# ---------------------------------------------------------------------------

def theorem1_params(r: int, c: float, n: int) -> tuple[int, float, bool]:
    """Parameter arithmetic: (s_target, t_target, precondition_met).

    s_target = floor((c/r^r)^r * ln n); t_target = n^(1 - c^(r-1));
    precondition_met iff (c/r^r)^r * ln n >= 1.
    """
    if r < 3 or c <= 0 or n < 1:
        raise ValueError("need r >= 3, c > 0, n >= 1")
    log_n = math.log(n)
    product = (c / r**r) ** r * log_n
    s_target = math.floor(product)
    try:
        t_target = math.exp((1.0 - c ** (r - 1)) * log_n)
    except OverflowError:
        t_target = math.inf
    return s_target, t_target, product >= 1.0


def _strict_part_size(t_target: float) -> int:
    """Smallest integer strictly greater than t_target."""
    return math.floor(t_target) + 1


def theorem1_check(
    g: Graph,
    r: int,
    c: float,
    tol: float = DEFAULT_TOL,
    budget: int = DEFAULT_BUDGET,
    instance_id: str = "",
) -> TheoremReport:
    """Full hypothesis-to-witness check: a large spectral radius forces a
    large complete r-partite subgraph.

    Vacuous unless mu(G) >= (1 - 1/(r-1) + c) n holds at the certified lower
    interval end and the (c/r^r)^r ln n >= 1 precondition is met; otherwise
    searches for r-1 parts of size s_target plus one part of size
    floor(t_target) + 1.
    """
    if r < 3:
        raise ValueError("theorem1 requires r >= 3")
    if c <= 0:
        raise ValueError("theorem1 requires c > 0")
    if g.n < 1:
        raise ValueError("theorem1 requires n >= 1")
    n = g.n
    s_target, t_target, precondition = theorem1_params(r, c, n)
    threshold = (1.0 - 1.0 / (r - 1) + c) * n
    mu = spectral_radius(g, tol)
    params = {"n": n, "r": r, "c": c}
    quantities = {
        "threshold": threshold,
        "s_target": s_target,
        "t_target": t_target,
        "precondition_met": precondition,
    }
    notes = []
    range_note = _c_range_note(r, c)
    if range_note:
        notes.append(range_note)
    if not mu.converged:
        return TheoremReport(
            instance_id, "theorem1", params, False, Verdict.INDETERMINATE,
            mu=mu, quantities=quantities,
            notes="; ".join(notes + ["eigenvalue iteration did not converge"]),
        )
    hyp = mu.lower >= threshold - EPS
    if not hyp or not precondition:
        if not hyp:
            notes.append(f"hypothesis mu >= {threshold:.6g} not established")
        if not precondition:
            notes.append("precondition (c/r^r)^r ln n >= 1 fails")
        return TheoremReport(
            instance_id, "theorem1", params, hyp, Verdict.VACUOUS,
            mu=mu, quantities=quantities, notes="; ".join(notes),
        )
    t_part = _strict_part_size(t_target)
    sizes = part_sizes((s_target,) * (r - 1) + (t_part,))
    quantities["t_part"] = t_part
    if sum(sizes) > n:
        return TheoremReport(
            instance_id, "theorem1", params, True, Verdict.VIOLATION,
            mu=mu, quantities=quantities,
            notes="; ".join(notes + ["required subgraph larger than host"]),
        )
    try:
        witness = find_complete_multipartite(g, sizes, budget=budget)
    except SearchBudgetExceeded:
        return TheoremReport(
            instance_id, "theorem1", params, True, Verdict.INDETERMINATE,
            mu=mu, quantities=quantities,
            notes="; ".join(notes + ["witness search budget exhausted"]),
        )
    if witness is None:
        return TheoremReport(
            instance_id, "theorem1", params, True, Verdict.VIOLATION,
            mu=mu, quantities=quantities,
            notes="; ".join(notes + ["exhaustive search found no witness"]),
        )
    assert verify_witness(g, witness)
    return TheoremReport(
        instance_id, "theorem1", params, True, Verdict.CONFIRMED,
        mu=mu, quantities=quantities, witness=witness, notes="; ".join(notes),
    )


def proof_chain_check(
    g: Graph,
    r: int,
    c: float,
    tol: float = DEFAULT_TOL,
    instance_id: str = "",
) -> TheoremReport:
    """Clique-count inequalities linking the spectral hypothesis to the
    multipartite conclusion.

    Under the spectral hypothesis, asserts k_r > c (r-2)/r^r * n^r and
    k_r >= (c/r^r) * n^r.  Desk-checkable at every n, unlike the full
    conclusion.
    """
    if r < 3:
        raise ValueError("proof chain requires r >= 3")
    if c <= 0:
        raise ValueError("proof chain requires c > 0")
    if g.n < 1:
        raise ValueError("proof chain requires n >= 1")
    n = g.n
    threshold = (1.0 - 1.0 / (r - 1) + c) * n
    mu = spectral_radius(g, tol)
    params = {"n": n, "r": r, "c": c}
    notes = []
    range_note = _c_range_note(r, c)
    if range_note:
        notes.append(range_note)
    if not mu.converged:
        return TheoremReport(
            instance_id, "chain", params, False, Verdict.INDETERMINATE,
            mu=mu, notes="; ".join(notes + ["eigenvalue iteration did not converge"]),
        )
    hyp = mu.lower >= threshold - EPS
    if not hyp:
        notes.append(f"hypothesis mu >= {threshold:.6g} not established")
        return TheoremReport(
            instance_id, "chain", params, False, Verdict.VACUOUS,
            mu=mu, quantities={"threshold": threshold}, notes="; ".join(notes),
        )
    kr = count_cliques(g, r)
    bound_strict = c * (r - 2) / r**r * float(n) ** r
    bound_weak = c / r**r * float(n) ** r
    ok = kr > bound_strict - EPS and kr >= bound_weak - EPS
    return TheoremReport(
        instance_id, "chain", params, True,
        Verdict.CONFIRMED if ok else Verdict.VIOLATION,
        mu=mu, kr=kr,
        quantities={
            "threshold": threshold,
            "bound_strict": bound_strict,
            "bound_weak": bound_weak,
        },
        notes="; ".join(notes),
    )


# ---------------------------------------------------------------------------
# clique density forces a large complete r-partite subgraph
# ---------------------------------------------------------------------------

def fact2_check(
    g: Graph,
    r: int,
    c: float,
    budget: int = DEFAULT_BUDGET,
    instance_id: str = "",
) -> TheoremReport:
    """Check: k_r >= c n^r (with c^r ln n >= 1) forces K_r(s,..,s,t).

    Searches for r-1 parts of size exactly floor(c^r ln n) and one part of
    size floor(t_target) + 1; smaller sizes are certified by monotonicity.
    No eigenvalue is involved: the hypothesis is exact integer arithmetic
    against a float threshold.
    """
    if r < 2:
        raise ValueError("fact2 requires r >= 2")
    if c <= 0:
        raise ValueError("fact2 requires c > 0")
    if g.n < 1:
        raise ValueError("fact2 requires n >= 1")
    n = g.n
    kr = count_cliques(g, r)
    log_n = math.log(n)
    product = c**r * log_n
    count_threshold = c * float(n) ** r
    precondition = product >= 1.0
    hyp_count = kr >= count_threshold - EPS
    params = {"n": n, "r": r, "c": c}
    s_target = math.floor(product)
    try:
        t_target = math.exp((1.0 - c ** (r - 1)) * log_n)
    except OverflowError:
        t_target = math.inf
    quantities = {
        "count_threshold": count_threshold,
        "s_target": s_target,
        "t_target": t_target,
        "precondition_met": precondition,
    }
    if not (hyp_count and precondition):
        notes = []
        if not hyp_count:
            notes.append(f"k_r = {kr} below c n^r = {count_threshold:.6g}")
        if not precondition:
            notes.append("precondition c^r ln n >= 1 fails")
        return TheoremReport(
            instance_id, "fact2", params, False, Verdict.VACUOUS,
            kr=kr, quantities=quantities, notes="; ".join(notes),
        )
    t_part = _strict_part_size(t_target)
    sizes = part_sizes((s_target,) * (r - 1) + (t_part,))
    quantities["t_part"] = t_part
    if sum(sizes) > n:
        return TheoremReport(
            instance_id, "fact2", params, True, Verdict.VIOLATION,
            kr=kr, quantities=quantities,
            notes="required subgraph larger than host",
        )
    try:
        witness = find_complete_multipartite(g, sizes, budget=budget)
    except SearchBudgetExceeded:
        return TheoremReport(
            instance_id, "fact2", params, True, Verdict.INDETERMINATE,
            kr=kr, quantities=quantities, notes="witness search budget exhausted",
        )
    if witness is None:
        return TheoremReport(
            instance_id, "fact2", params, True, Verdict.VIOLATION,
            kr=kr, quantities=quantities,
            notes="exhaustive search found no witness",
        )
    assert verify_witness(g, witness)
    return TheoremReport(
        instance_id, "fact2", params, True, Verdict.CONFIRMED,
        kr=kr, quantities=quantities, witness=witness,
    )


# ---------------------------------------------------------------------------
# Turan graph edge bound, exact integer arithmetic
# ---------------------------------------------------------------------------

def fact3_check(n: int, r: int, instance_id: str = "") -> TheoremReport:
    """Check 2 e(T_r(n)) >= (1 - 1/r) n^2 - r/4 exactly.

    Cleared of denominators (multiply by 4r):
    8 r e(T_r(n)) >= 4 (r-1) n^2 - r^2, compared in exact integers; the
    slack can be below 1, so floating point is never used here.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    sizes = turan_part_sizes(n, r)
    e = (n * n - sum(s * s for s in sizes)) // 2
    lhs = 8 * r * e
    rhs = 4 * (r - 1) * n * n - r * r
    verdict = Verdict.CONFIRMED if lhs >= rhs else Verdict.VIOLATION
    return TheoremReport(
        instance_id, "fact3", {"n": n, "r": r}, True, verdict,
        quantities={"edges": e, "lhs_8re": lhs, "rhs_4r1nn_rr": rhs},
    )


# ---------------------------------------------------------------------------
# chromatic number and subgraph containment (for the spectral extremal limit)
# ---------------------------------------------------------------------------

def chromatic_number(f: Graph) -> int:
    """Exact chromatic number by branch and bound; limited to n <= 16.

    Lower bound from the clique number, upper bound from greedy coloring
    in descending degree order, then k-colorability backtracking between.
    """
    n = f.n
    if n > 16:
        raise ValueError("chromatic_number limited to n <= 16")
    if n == 0:
        return 0
    if f.edge_count() == 0:
        return 1
    clique = 1
    while clique < n and count_cliques(f, clique + 1) > 0:
        clique += 1
    order = sorted(range(n), key=lambda v: (-f.degree(v), v))
    greedy = [-1] * n
    for v in order:
        taken = {greedy[u] for u in _bits(f.row(v)) if greedy[u] >= 0}
        color = 0
        while color in taken:
            color += 1
        greedy[v] = color
    upper = max(greedy) + 1
    for k in range(clique, upper):
        if _colorable(f, order, k):
            return k
    return upper


def _bits(mask: int):
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def _colorable(f: Graph, order: list[int], k: int) -> bool:
    colors = [-1] * f.n

    def assign(idx: int, used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        forbidden = {colors[u] for u in _bits(f.row(v)) if colors[u] >= 0}
        # new colors are introduced in order, killing color-permutation symmetry
        for color in range(min(used + 1, k)):
            if color in forbidden:
                continue
            colors[v] = color
            if assign(idx + 1, max(used, color + 1)):
                return True
            colors[v] = -1
        return False

    return assign(0, 0)


def contains_subgraph(g: Graph, f: Graph) -> bool:
    """True iff g has a (not necessarily induced) subgraph isomorphic to f.

    Backtracking embedding: pattern vertices in descending degree order,
    candidates filtered by degree and by adjacency to already-placed
    neighbors, tried in ascending host label order.
    """
    if f.n > 10:
        raise ValueError("pattern limited to n <= 10")
    if f.n > g.n:
        return False
    order = sorted(range(f.n), key=lambda v: (-f.degree(v), v))
    pos = {v: i for i, v in enumerate(order)}
    placed_nbrs: list[list[int]] = []
    for i, v in enumerate(order):
        placed_nbrs.append([u for u in _bits(f.row(v)) if pos[u] < i])
    f_degs = [f.degree(v) for v in order]
    g_rows = [g.row(v) for v in range(g.n)]
    g_degs = [g.degree(v) for v in range(g.n)]
    full = (1 << g.n) - 1
    images = [0] * f.n  # images[i] = host vertex for order[i]

    def embed(i: int, used: int) -> bool:
        if i == f.n:
            return True
        cand = full & ~used
        for u in placed_nbrs[i]:
            cand &= g_rows[images[pos[u]]]
        need = f_degs[i]
        m = cand
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            if g_degs[w] < need:
                continue
            images[i] = w
            if embed(i + 1, used | b):
                return True
        return False

    return embed(0, 0)


# ---------------------------------------------------------------------------
# finite-n spectral extremal scan and the limit sandwich
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpexResult:
    """Maximum spectral radius over F-free graphs of a given order."""

    max_mu: float
    witness: Graph
    maximal_graphs: int


def spex_scan(
    n: int,
    f: Graph,
    max_n: int = 8,
    tol: float = DEFAULT_TOL,
) -> SpexResult:
    """Maximize mu(G) over all F-free graphs on n labeled vertices.

    mu is monotone under edge addition and F-freeness survives edge
    deletion, so only maximal F-free graphs (no addable edge) need their
    eigenvalue computed.  The scan decides edges one by one: an edge whose
    inclusion creates an F-copy is pruned immediately (supersets only get
    worse), exclusions are rechecked for maximality at the leaves.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise ValueError(f"n = {n} exceeds exhaustive scan bound {max_n}")
    if contains_subgraph(Graph.empty(n), f):
        raise ValueError("pattern is contained in every graph of this order")
    pairs = list(combinations(range(n), 2))
    rows = [0] * n
    best_mu = -1.0
    best_graph: Graph | None = None
    maximal = 0

    def current() -> Graph:
        return Graph(n, list(rows), validate=False)

    def leaf(excluded: list[tuple[int, int]]) -> None:
        nonlocal best_mu, best_graph, maximal
        g = current()
        for u, v in excluded:
            if not contains_subgraph(g.add_edge(u, v), f):
                return  # an edge is still addable: dominated by a supergraph
        maximal += 1
        est = spectral_radius(g, tol)
        if est.value > best_mu:
            best_mu = est.value
            best_graph = g

    def decide(i: int, excluded: list[tuple[int, int]]) -> None:
        if i == len(pairs):
            leaf(excluded)
            return
        u, v = pairs[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        creates = contains_subgraph(current(), f)
        if not creates:
            decide(i + 1, excluded)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        if creates:
            # justified exclusion: adding this edge creates F in the current
            # graph, hence in every supergraph; no recheck needed at leaves
            decide(i + 1, excluded)
        else:
            excluded.append((u, v))
            decide(i + 1, excluded)
            excluded.pop()

    decide(0, [])
    assert best_graph is not None
    return SpexResult(best_mu, best_graph, maximal)


def theorem2_gap(
    n: int,
    f: Graph,
    max_n: int = 8,
    tol: float = DEFAULT_TOL,
    instance_id: str = "",
) -> TheoremReport:
    """Finite-n sandwich around the spectral extremal limit 1 - 1/(r-1).

    lower = mu(T_{r-1}(n))/n from the exact quotient; upper = spex(n, F)/n
    from the exhaustive scan.  Certifies lower <= upper and the Turan-graph
    floor lower >= 1 - 1/(r-1) - (r-1)/(4 n^2); reports upper minus the
    limit as the finite-n gap (its sign is unconstrained at small n).
    """
    r = chromatic_number(f)
    if r < 3:
        raise ValueError("limit statement needs chromatic number >= 3")
    if n < r - 1:
        raise ValueError("need n >= r - 1 so the Turan graph has r - 1 parts")
    sizes = [s for s in turan_part_sizes(n, r - 1) if s > 0]
    lower = quotient_mu_multipartite(sizes) / n
    spex = spex_scan(n, f, max_n=max_n, tol=tol)
    upper = spex.max_mu / n
    limit = 1.0 - 1.0 / (r - 1)
    turan_floor = limit - (r - 1) / (4.0 * n * n)
    sandwich_ok = lower <= upper + EPS
    floor_ok = lower >= turan_floor - EPS
    verdict = Verdict.CONFIRMED if sandwich_ok and floor_ok else Verdict.VIOLATION
    notes = []
    if not sandwich_ok:
        notes.append("lower bound exceeds the exhaustive maximum")
    if not floor_ok:
        notes.append("Turan quotient fell below its guaranteed floor")
    return TheoremReport(
        instance_id, "gap", {"n": n, "r": r}, True, verdict,
        quantities={
            "lower": lower,
            "upper": upper,
            "limit": limit,
            "gap": upper - limit,
            "turan_floor": turan_floor,
            "maximal_graphs": spex.maximal_graphs,
        },
        notes="; ".join(notes),
    )

"""Undirected simple graphs with bit-packed adjacency, plus generators and codecs.

Vertices are the integers 0..n-1.  Each adjacency row is stored as a Python
int used as a bitset, so neighborhood intersections are single ``&``
operations regardless of n.  Graphs are immutable after construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

MAX_VERTICES = 10_000
GRAPH6_MAX_N = 62  # single-byte size; v1 encoder limit

_MASK64 = (1 << 64) - 1


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    """Graph too large for the requested encoding."""


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    ``validate=False`` skips the symmetry scan; internal constructors that
    build symmetric rows by design use it to stay O(n^2/64) on large graphs.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: Sequence[int], validate: bool = True):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(rows) != n:
            raise ValueError("row count does not match n")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        if validate:
            for v, row in enumerate(rows):
                m = row
                while m:
                    b = m & -m
                    m ^= b
                    u = b.bit_length() - 1
                    if not rows[u] >> v & 1:
                        raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        self.n = n
        self._rows = tuple(rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, validate=False)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n)

    def row(self, v: int) -> int:
        """Neighbor bitmask of v."""
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted nonincreasing."""
        return tuple(sorted((r.bit_count() for r in self._rows), reverse=True))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            m = self._rows[u] >> (u + 1) << (u + 1)
            while m:
                b = m & -m
                m ^= b
                yield u, b.bit_length() - 1

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [full & ~r & ~(1 << v) for v, r in enumerate(self._rows)]
        return Graph(self.n, rows, validate=False)

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with edge (u, v) added (no-op if present)."""
        if u == v:
            raise ValueError("loops not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows, validate=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def part_sizes(sizes: Iterable[int]) -> tuple[int, ...]:
    """Normalize part sizes: nonempty, every entry >= 1, sorted nonincreasing."""
    out = tuple(sorted((int(s) for s in sizes), reverse=True))
    if not out:
        raise ValueError("part sizes must be nonempty")
    if out[-1] < 1:
        raise ValueError("part sizes must be positive")
    return out


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; parts laid out consecutively, largest first.

    u ~ v iff u and v lie in different parts.
    """
    szs = part_sizes(sizes)
    n = sum(szs)
    if n > MAX_VERTICES:
        raise ValueError(f"total size {n} exceeds {MAX_VERTICES}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in szs:
        part_mask = ((1 << s) - 1) << start
        other = full & ~part_mask
        rows.extend([other] * s)
        start += s
    return Graph(n, rows, validate=False)


def turan_part_sizes(n: int, r: int) -> tuple[int, ...]:
    """Part sizes of the r-partite Turan graph on n vertices (nonincreasing)."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    q, rem = divmod(n, r)
    return (q + 1,) * rem + (q,) * (r - rem)


def turan_graph(n: int, r: int) -> Graph:
    """r-partite Turan graph: parts as equal as possible, ceil parts first."""
    sizes = tuple(s for s in turan_part_sizes(n, r) if s > 0)
    if not sizes:
        return Graph.empty(n)
    if len(sizes) == 1:
        return Graph.empty(n)
    return complete_multipartite(sizes)


def complete_graph(n: int) -> Graph:
    if n == 0:
        return Graph.empty(0)
    return complete_multipartite((1,) * n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _splitmix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def pair_uniform(seed: int, index: int) -> float:
    """Deterministic uniform in [0, 1) for (seed, pair index), platform-independent.

    Counter-based: value depends only on the two keys, never on call order,
    so parallel generation cannot perturb results.
    """
    z = _splitmix64(seed & _MASK64)
    return (_splitmix64(z ^ (index & _MASK64)) >> 11) * (1.0 / (1 << 53))


def gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each unordered pair kept independently with probability p.

    Pair index counts pairs (u, v), u < v, in lexicographic order.  Identical
    (n, p, seed) give an identical graph on every platform and thread count.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rows = [0] * n
    index = 0
    for u in range(n):
        for v in range(u + 1, n):
            if pair_uniform(seed, index) < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            index += 1
    return Graph(n, rows, validate=False)


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_decode_size(data: bytes, pos: int) -> tuple[int, int]:
    if pos >= len(data):
        raise Graph6Error("missing size byte", pos)
    b = data[pos]
    if not 63 <= b <= 126:
        raise Graph6Error(f"byte {b} outside [63, 126]", pos)
    if b != 126:
        return b - 63, pos + 1
    # 126 introduces a 3-byte size; a second 126 a 6-byte size
    if pos + 1 < len(data) and data[pos + 1] == 126:
        count, start = 6, pos + 2
    else:
        count, start = 3, pos + 1
    if start + count > len(data):
        raise Graph6Error("truncated multi-byte size", len(data))
    n = 0
    for i in range(start, start + count):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(f"byte {data[i]} outside [63, 126]", i)
        n = (n << 6) | (data[i] - 63)
    return n, start + count


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header)."""
    s = text.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
        base = len(_G6_HEADER)
    # non-ASCII characters map to byte 255 so the range checks flag them
    data = bytes(min(ord(c), 255) for c in s)
    n, pos = _g6_decode_size(data, 0)
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"body length {len(data) - pos} != expected {nbytes}", base + pos
        )
    rows = [0] * n
    bit = 0
    for i in range(pos, pos + nbytes):
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside [63, 126]", base + i)
        group = b - 63
        for k in range(5, -1, -1):
            if bit >= nbits:
                if group >> k & 1:
                    raise Graph6Error("nonzero padding bits", base + i)
                continue
            if group >> k & 1:
                u, v = _g6_pair(bit)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit += 1
    return Graph(n, rows, validate=False)


def _g6_pair(bit: int) -> tuple[int, int]:
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    v = 1
    while v * (v - 1) // 2 + v <= bit:
        v += 1
    return bit - v * (v - 1) // 2, v


def to_graph6(g: Graph) -> str:
    """Encode to graph6; v1 supports n <= 62 (single-byte size)."""
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(
            f"graph6 encoding limited to n <= {GRAPH6_MAX_N}, got {g.n}"
        )
    out = [chr(63 + g.n)]
    group = 0
    nbits = 0
    for v in range(1, g.n):
        col = g.row(v)
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + group))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (group << (6 - nbits))))
    return "".join(out)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v" with u < v
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in text.split("\n") if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not 0 <= u < v < n:
            raise ValueError(f"edge ({u}, {v}) violates 0 <= u < v < n")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

"""Immutable simple-graph representation with bitset neighborhoods.

Vertices are labelled 0..n-1. Each neighborhood is stored as a Python int
used as a bitset: bit j of ``adj[i]`` is set iff i and j are adjacent.
Graphs are immutable after construction and every operation here is a pure
function, so instances can be shared freely between worker processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

#: Multiplicity vector for a blow-up: one positive integer per vertex.
MultiplicityVector = Sequence[int]

INFINITY = math.inf


class DisconnectedGraphError(ValueError):
    """Raised by operations that need a connected graph."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 (no loops, no multi-edges)."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} neighborhoods, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"neighborhood of {i} mentions a vertex >= {self.n}")
            if (nb >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in iter_bits(nb):
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric edge ({i}, {j})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_adjacency(cls, rows: Sequence[Sequence[int]]) -> Graph:
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("adjacency matrix must be square")
        adj = []
        for row in rows:
            mask = 0
            for j, a in enumerate(row):
                if a not in (0, 1):
                    raise ValueError("adjacency entries must be 0 or 1")
                mask |= a << j
            adj.append(mask)
        return cls(n, tuple(adj))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            for j in iter_bits(self.adj[i] >> (i + 1)):
                yield i, i + 1 + j

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.adj[i] == full ^ (1 << i) for i in range(self.n))

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.degree(v)


def is_dominating(g: Graph, v: int) -> bool:
    """True iff v is adjacent to every other vertex."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return g.degree(v) == g.n - 1


def is_reduced(g: Graph) -> bool:
    """True iff no two vertices share the same neighborhood (no twins)."""
    return len(set(g.adj)) == g.n


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; -1 for unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        d += 1
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; ``math.inf`` iff the graph is disconnected."""
    best = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        if -1 in dist:
            return INFINITY
        best = max(best, max(dist))
    return best


@dataclass(frozen=True)
class PathWitnessContext:
    """A geodesic realizing the diameter: ``path`` has ``ell`` + 1 vertices."""

    path: tuple[int, ...]
    ell: int


def diametral_geodesic(g: Graph) -> PathWitnessContext:
    """Deterministic shortest path between a pair at maximum distance.

    Ties are broken by the lexicographically smallest endpoint pair (u, v)
    with u < v, then by the lexicographically smallest vertex sequence among
    shortest u-v paths.
    """
    dists = [bfs_distances(g, v) for v in range(g.n)]
    if any(-1 in row for row in dists):
        raise DisconnectedGraphError("no geodesic: graph is disconnected")
    diam = max(max(row) for row in dists)
    if diam == 0:
        return PathWitnessContext((0,), 0)
    u, v = next(
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if dists[i][j] == diam
    )
    # Greedy smallest next vertex that stays on a shortest u-v path.
    to_v = dists[v]
    path = [u]
    cur = u
    while cur != v:
        cur = next(w for w in iter_bits(g.adj[cur]) if to_v[w] == to_v[cur] - 1)
        path.append(cur)
    return PathWitnessContext(tuple(path), diam)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, ordered by smallest member."""
    components = []
    remaining = (1 << g.n) - 1
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~seen
            seen |= frontier
        components.append(list(iter_bits(seen)))
        remaining &= ~seen
    return components


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled 0..k-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertex in induced subgraph")
    adj = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for w in iter_bits(g.adj[v]):
            j = index.get(w)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(vertices), tuple(adj))


def _validated_multiplicities(g: Graph, m: MultiplicityVector) -> tuple[int, ...]:
    m = tuple(m)
    if len(m) != g.n:
        raise ValueError(f"multiplicity vector has length {len(m)}, graph has {g.n} vertices")
    if any(k < 1 for k in m):
        raise ValueError("every multiplicity must be >= 1")
    return m


def multiply_vertices(g: Graph, m: MultiplicityVector) -> Graph:
    """Blow-up: replace vertex i by an independent set of m[i] clones.

    Clones of i and clones of j are fully joined iff i ~ j in ``g``. Clone
    blocks are laid out contiguously in input vertex order, so vertex i's
    clones occupy positions sum(m[:i]) .. sum(m[:i+1])-1.
    """
    m = _validated_multiplicities(g, m)
    starts = [0]
    for k in m:
        starts.append(starts[-1] + k)
    blocks = [((1 << m[j]) - 1) << starts[j] for j in range(g.n)]
    adj: list[int] = []
    for i in range(g.n):
        nb = 0
        for j in iter_bits(g.adj[i]):
            nb |= blocks[j]
        adj.extend([nb] * m[i])
    return Graph(starts[-1], tuple(adj))


def duplicate_vertex(g: Graph, v: int) -> Graph:
    """Add a new last vertex joined to exactly the neighbors of ``v``.

    Same graph as the blow-up with multiplicity 2 at v and 1 elsewhere, up to
    moving the clone from position v+1 to the end; appending keeps original
    vertex labels stable across chained duplications.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    clone_bit = 1 << g.n
    adj = [nb | clone_bit if (g.adj[v] >> i) & 1 else nb for i, nb in enumerate(g.adj)]
    adj.append(g.adj[v])
    return Graph(g.n + 1, tuple(adj))


def find_adjacent_disjoint_pair(g: Graph) -> tuple[int, int] | None:
    """First edge (i, j), i < j in lexicographic order, whose endpoints have
    disjoint neighborhoods; None if every edge's endpoints share a neighbor."""
    for i in range(g.n):
        for j in iter_bits(g.adj[i] >> (i + 1)):
            j += i + 1
            if g.adj[i] & g.adj[j] == 0:
                return i, j
    return None

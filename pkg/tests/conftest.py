"""Shared fixtures: independent little oracles and hypothesis strategies.

The oracles here deliberately avoid the library's bitmask machinery (deque
BFS over neighbor lists, sympy for exact rank) so that agreement tests pit
two independent implementations against each other.
"""

from __future__ import annotations

import math
from collections import deque

from hypothesis import strategies as st

from rowspace.graph import Graph


def bfs_oracle(g: Graph, source: int) -> list[float]:
    """Plain queue BFS over adjacency lists; math.inf for unreachable."""
    nbrs = {v: [u for u in range(g.n) if (g.adj[v] >> u) & 1] for v in range(g.n)}
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in nbrs[v]:
            if dist[u] == math.inf:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diameter_oracle(g: Graph) -> float:
    return max(d for v in range(g.n) for d in bfs_oracle(g, v))


def all_shortest_paths(g: Graph, u: int, v: int) -> list[tuple[int, ...]]:
    """Every shortest u-v path, by BFS-layer DFS."""
    to_v = bfs_oracle(g, v)
    out: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        cur = path[-1]
        if cur == v:
            out.append(tuple(path))
            return
        for w in range(g.n):
            if (g.adj[cur] >> w) & 1 and to_v[w] == to_v[cur] - 1:
                extend(path + [w])

    if to_v[u] != math.inf:
        extend([u])
    return out


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, min_edges: int = 0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    adj = [0] * n
    edges = 0
    for b, (i, j) in enumerate(pairs):
        if (mask >> b) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            edges += 1
    if edges < min_edges:
        extra = draw(
            st.lists(
                st.sampled_from(pairs) if pairs else st.nothing(),
                min_size=min_edges - edges,
                max_size=min_edges,
            )
        )
        for i, j in extra:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


@st.composite
def connected_graphs(draw, min_n: int = 2, max_n: int = 8):
    """Random graph plus a random spanning tree to force connectivity."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    g = draw(graphs(min_n=n, max_n=n))
    adj = list(g.adj)
    for v in range(1, n):
        u = draw(st.integers(min_value=0, max_value=v - 1))
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


@st.composite
def long_diameter_graphs(draw, max_n: int = 10):
    """Connected graphs built around a 4-edge spine; in the chordless case
    the spine keeps the diameter at >= 4 (tree distances never shrink when
    leaves attach), and a drawn chord may or may not preserve that."""
    n = draw(st.integers(min_value=5, max_value=max_n))
    edges = [(i, i + 1) for i in range(4)]
    for v in range(5, n):
        edges.append((draw(st.integers(0, v - 1)), v))
    nchords = draw(st.integers(0, 1))
    for _ in range(nchords):
        u = draw(st.integers(0, n - 2))
        v = draw(st.integers(u + 1, n - 1))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


@st.composite
def multiplicities(draw, n: int, cap: int = 3):
    return tuple(
        draw(st.lists(st.integers(1, cap), min_size=n, max_size=n))
    )

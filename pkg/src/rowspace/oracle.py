"""Brute-force ground truth for the witness engine.

``brute_force_witness`` scans every non-zero (0,1)-vector in ascending
binary order (the vector read as a little-endian integer), skips actual
rows, and decides row-space membership by reducing the candidate against a
row-echelon form of the adjacency matrix computed once per graph. This is
the definitional search: whatever the constructive strategies claim must
agree with it.

``exhaustive_verify`` runs the full engine (constructive strategies with
oracle fallback) over every labeled connected graph with at least one edge
on n vertices, recording any graph for which no witness exists. The labeled
generator does not deduplicate isomorphs; redundancy only costs time at the
supported sizes (n <= 7).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import Pool

from .graph import Graph, iter_bits
from .graph6 import write_graph6
from .linalg import adjacency_matrix, integer_row_echelon, solve_membership
from .witness import DEFAULT_ORACLE_LIMIT, Strategy, Witness, find_witness

GENERATOR_LIMIT = 7


class CapacityError(ValueError):
    """Input exceeds a configured exhaustive-search bound."""


@dataclass(frozen=True)
class OracleResult:
    found: bool
    witness: Witness | None
    candidates_checked: int
    elapsed: float


@dataclass
class ExhaustiveReport:
    n: int
    graphs_checked: int
    failures: list[str] = field(default_factory=list)
    strategy_histogram: dict[str, int] = field(default_factory=dict)


def _reduces_to_zero(echelon: list[list[int]], pivots: list[int], x: list[int]) -> bool:
    # x is in the row space iff appending it adds no pivot, i.e. iff the
    # echelon rows eliminate it completely. Scaling by the pivot keeps the
    # arithmetic integral; only zero-ness of the result matters.
    y = x
    for row, pc in zip(echelon, pivots):
        yp = y[pc]
        if yp:
            p = row[pc]
            y = [p * a - yp * b for a, b in zip(y, row)]
    return not any(y)


def _adjacency_echelon(g: Graph) -> tuple[list[list[int]], list[int]]:
    rows = [[(nb >> j) & 1 for j in range(g.n)] for nb in g.adj]
    return integer_row_echelon(rows)


def brute_force_witness(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> OracleResult:
    """First witness in candidate scan order, with a solved certificate."""
    if g.n > limit:
        raise CapacityError(f"n={g.n} exceeds the oracle bound {limit}")
    start = time.perf_counter()
    echelon, pivots = _adjacency_echelon(g)
    row_masks = set(g.adj)
    checked = 0
    for mask in range(1, 1 << g.n):
        if mask in row_masks:
            continue
        checked += 1
        x = [(mask >> j) & 1 for j in range(g.n)]
        if _reduces_to_zero(echelon, pivots, x):
            vector = tuple(x)
            cert = solve_membership(adjacency_matrix(g), vector)
            if cert is None:
                raise RuntimeError("echelon reduction and exact solve disagree")
            witness = Witness(vector, cert, Strategy.ORACLE)
            return OracleResult(True, witness, checked, time.perf_counter() - start)
    return OracleResult(False, None, checked, time.perf_counter() - start)


def enumerate_all_witnesses(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> list[tuple[int, ...]]:
    """Every qualifying (0,1)-vector, in ascending binary order."""
    if g.n > limit:
        raise CapacityError(f"n={g.n} exceeds the oracle bound {limit}")
    echelon, pivots = _adjacency_echelon(g)
    row_masks = set(g.adj)
    out = []
    for mask in range(1, 1 << g.n):
        if mask in row_masks:
            continue
        x = [(mask >> j) & 1 for j in range(g.n)]
        if _reduces_to_zero(echelon, pivots, x):
            out.append(tuple(x))
    return out


def _edge_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _mask_graph(n: int, mask: int, pairs: list[tuple[int, int]]) -> Graph | None:
    """Graph for an edge-subset mask, or None if disconnected."""
    adj = [0] * n
    m = mask
    while m:
        low = m & -m
        m ^= low
        i, j = pairs[low.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    if seen != (1 << n) - 1:
        return None
    return Graph(n, tuple(adj))


def iter_connected_graphs(n: int):
    """All labeled connected graphs with >= 1 edge on n vertices."""
    if n > GENERATOR_LIMIT:
        raise CapacityError(
            f"built-in generator covers n <= {GENERATOR_LIMIT}; feed graph6 input instead"
        )
    pairs = _edge_pairs(n)
    for mask in range(1, 1 << len(pairs)):
        g = _mask_graph(n, mask, pairs)
        if g is not None:
            yield g


def _scan_chunk(args: tuple[int, int, int, int]) -> tuple[int, list[str], dict[str, int]]:
    n, start, stop, oracle_limit = args
    pairs = _edge_pairs(n)
    checked = 0
    failures: list[str] = []
    histogram: dict[str, int] = {}
    for mask in range(max(start, 1), stop):
        g = _mask_graph(n, mask, pairs)
        if g is None:
            continue
        checked += 1
        w = find_witness(g, oracle_limit)
        if w is None:
            failures.append(write_graph6(g))
        else:
            key = w.strategy.value
            histogram[key] = histogram.get(key, 0) + 1
    return checked, failures, histogram


def exhaustive_verify(
    n: int,
    oracle_limit: int = DEFAULT_ORACLE_LIMIT,
    jobs: int = 1,
) -> ExhaustiveReport:
    """Check the witness engine on every labeled connected n-vertex graph.

    ``failures`` lists (as graph6) every graph for which no witness exists;
    an empty list means the searched property held throughout. With
    ``jobs`` > 1 the edge-mask index range is partitioned across worker
    processes and the partial reports are merged.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > GENERATOR_LIMIT:
        raise CapacityError(
            f"built-in generator covers n <= {GENERATOR_LIMIT}; feed graph6 input instead"
        )
    total = 1 << (n * (n - 1) // 2)
    report = ExhaustiveReport(n=n, graphs_checked=0)
    if jobs <= 1:
        parts = [_scan_chunk((n, 0, total, oracle_limit))]
    else:
        nchunks = min(total, jobs * 16)
        bounds = [total * k // nchunks for k in range(nchunks + 1)]
        chunks = [(n, bounds[k], bounds[k + 1], oracle_limit) for k in range(nchunks)]
        with Pool(processes=jobs) as pool:
            parts = pool.map(_scan_chunk, chunks)
    for checked, failures, histogram in parts:
        report.graphs_checked += checked
        report.failures.extend(failures)
        for key, count in histogram.items():
            report.strategy_histogram[key] = report.strategy_histogram.get(key, 0) + count
    report.failures.sort()
    return report

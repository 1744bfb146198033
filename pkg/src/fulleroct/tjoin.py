"""Exact minimum T-joins via terminal metric plus matching enumeration.

A T-join is an edge set whose odd-degree vertices are exactly the terminal
set T.  Its minimum size equals the minimum-weight perfect matching of T
under shortest-path distances; with |T| = 12 (the fullerene case) there are
only 10395 pairings, so a fixed-order exhaustive enumeration is exact and
deterministic.  An independent subset-search oracle is provided for
cross-checking on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from fulleroct.graph import Edge, EmbeddedGraph, GraphError, bfs_distances, edge_key

MAX_TERMINALS = 16


class TJoinError(GraphError):
    pass


class OddTerminalSetError(TJoinError):
    pass


class TooManyTerminalsError(TJoinError):
    pass


class UnknownEdgeError(TJoinError):
    pass


class CapExceededError(TJoinError):
    pass


def odd_degree_vertices(edges: Iterable[Edge]) -> frozenset[int]:
    odd: set[int] = set()
    for u, v in edges:
        odd ^= {u, v}
    return frozenset(odd)


def is_tjoin(g: EmbeddedGraph, edges: Iterable[Edge], terminals: Iterable[int]) -> bool:
    """True iff the odd-degree vertex set of the edge subset equals T."""
    edge_set = set(g.edges)
    es = [edge_key(u, v) for u, v in edges]
    for e in es:
        if e not in edge_set:
            raise UnknownEdgeError(f"edge {e} is not in the graph")
    return odd_degree_vertices(es) == frozenset(terminals)


@dataclass(frozen=True)
class TJoin:
    """A T-join with its cardinality witness."""

    graph: EmbeddedGraph
    terminals: frozenset[int]
    edges: frozenset[Edge]

    def __post_init__(self):
        if odd_degree_vertices(self.edges) != self.terminals:
            raise TJoinError("edge set is not a T-join for the given terminals")

    @property
    def value(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TerminalMetric:
    """Pairwise BFS distances between terminals, with predecessor trees
    (lowest-id parent per vertex) kept for path realisation."""

    terminals: tuple[int, ...]
    dist: tuple[tuple[int, ...], ...]
    parents: tuple[tuple[int, ...], ...] = field(repr=False)

    def path_edges(self, i: int, j: int) -> list[Edge]:
        """Edges of the realised shortest path from terminal i to terminal j."""
        par = self.parents[i]
        out = []
        v = self.terminals[j]
        while v != self.terminals[i]:
            p = par[v]
            out.append(edge_key(p, v))
            v = p
        return out


def _check_terminals(g: EmbeddedGraph, terminals: Iterable[int]) -> list[int]:
    T = sorted(set(terminals))
    for t in T:
        if not 0 <= t < g.n:
            raise TJoinError(f"terminal {t} out of range")
    if len(T) % 2:
        raise OddTerminalSetError(f"terminal set has odd size {len(T)}")
    return T


def terminal_metric(g: EmbeddedGraph, terminals: Iterable[int]) -> TerminalMetric:
    T = _check_terminals(g, terminals)
    dists = []
    parents = []
    for t in T:
        dist = bfs_distances(g, t)
        # Lowest-id parent among the previous BFS level: deterministic paths.
        par = [-1] * g.n
        for v in range(g.n):
            if v == t or dist[v] < 0:
                continue
            par[v] = min(u for u in g.rotation[v] if dist[u] == dist[v] - 1)
        dists.append(dist)
        parents.append(tuple(par))
    matrix = tuple(tuple(dists[i][t] for t in T) for i in range(len(T)))
    return TerminalMetric(tuple(T), matrix, tuple(parents))


def _min_matching(dist: Sequence[Sequence[int]]) -> tuple[int, list[tuple[int, int]]]:
    """Minimum-weight perfect matching by fixed-order recursive pairing.

    The first unmatched terminal pairs with each remaining one in index
    order; the first minimum found is kept, so the result does not depend
    on any scheduling.
    """
    k = len(dist)
    best_val = None
    best_pairs: list[tuple[int, int]] = []

    def recurse(unmatched: tuple[int, ...], acc: int, pairs: list[tuple[int, int]]):
        nonlocal best_val, best_pairs
        if best_val is not None and acc >= best_val:
            return
        if not unmatched:
            best_val = acc
            best_pairs = list(pairs)
            return
        i = unmatched[0]
        rest = unmatched[1:]
        for idx, j in enumerate(rest):
            pairs.append((i, j))
            recurse(rest[:idx] + rest[idx + 1 :], acc + dist[i][j], pairs)
            pairs.pop()

    recurse(tuple(range(k)), 0, [])
    assert best_val is not None
    return best_val, best_pairs


def min_tjoin(g: EmbeddedGraph, terminals: Iterable[int]) -> TJoin:
    """Exact minimum T-join.

    Requires |T| <= 16 (a hard error, never a silent heuristic): the
    matching enumeration is exact and fullerene duals always have |T| = 12.
    """
    T = _check_terminals(g, terminals)
    if len(T) > MAX_TERMINALS:
        raise TooManyTerminalsError(
            f"|T| = {len(T)} exceeds the enumeration guard ({MAX_TERMINALS})"
        )
    if not T:
        return TJoin(g, frozenset(), frozenset())
    tm = terminal_metric(g, T)
    value, pairs = _min_matching(tm.dist)
    edges: set[Edge] = set()
    for i, j in pairs:
        edges ^= set(tm.path_edges(i, j))
    # The symmetric difference of optimally matched shortest paths can never
    # beat the matching value, and as a T-join it can never be smaller.
    assert len(edges) == value, "realised join does not match the matching value"
    return TJoin(g, frozenset(T), frozenset(edges))


def brute_force_tjoin(g: EmbeddedGraph, terminals: Iterable[int], cap: int) -> TJoin:
    """Independent oracle: exhaustive edge-subset search by cardinality.

    Searches all subsets of size 0, 1, ..., cap in lexicographic edge order,
    pruned only by the sound parity bound (each edge flips exactly two
    vertex parities).  Intended for m <= 36 or small caps.
    """
    T = _check_terminals(g, terminals)
    target = 0
    for t in T:
        target |= 1 << t
    edges = g.edges
    masks = [(1 << u) | (1 << v) for u, v in edges]
    m = len(edges)

    def search(start: int, remaining: int, acc: int, chosen: list[int]):
        if acc == target and remaining == 0:
            return list(chosen)
        if remaining == 0 or (acc ^ target).bit_count() > 2 * remaining:
            return None
        for i in range(start, m - remaining + 1):
            chosen.append(i)
            hit = search(i + 1, remaining - 1, acc ^ masks[i], chosen)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    for k in range(cap + 1):
        hit = search(0, k, 0, [])
        if hit is not None:
            return TJoin(g, frozenset(T), frozenset(edges[i] for i in hit))
    raise CapExceededError(f"no T-join of size <= {cap} found")

"""Odd cycle transversals, independent sets and bound evaluation.

The minimum odd cycle transversal of a fullerene is the primal image of the
minimum T-join of its dual triangulation: removing the join kills every
odd-degree dual vertex, so the complement is bipartite.  Deleting one
endpoint per transversal edge and taking the larger colour class, followed
by a greedy augmentation pass, yields the large independent sets the bound
rows are checked against.

All bound comparisons are exact integer arithmetic (e.g. 5 tau^2 <= 12 n
instead of floats), so extremal equality cases cannot be lost to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from fulleroct.graph import (
    Edge,
    EmbeddedGraph,
    FullereneGraph,
    GraphError,
    diameter,
    dual,
    edge_key,
)
from fulleroct.tjoin import TJoin, min_tjoin


class TransversalError(GraphError):
    pass


class TooLargeError(TransversalError):
    pass


def _two_color(
    g: EmbeddedGraph, banned_vertices: frozenset[int] = frozenset(),
    banned_edges: frozenset[Edge] = frozenset(),
) -> list[int] | None:
    """BFS 2-colouring of g minus the banned parts; None on an odd cycle."""
    color = [-1] * g.n
    for start in range(g.n):
        if start in banned_vertices or color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                for u in g.rotation[v]:
                    if u in banned_vertices or edge_key(u, v) in banned_edges:
                        continue
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            queue = nxt
    return color


@dataclass(frozen=True, eq=False)
class Transversal:
    """Edge set whose removal makes the fullerene bipartite, carried with
    the dual T-join it came from."""

    fullerene: FullereneGraph
    edges: frozenset[Edge]
    dual_join: TJoin
    is_matching: bool

    @property
    def value(self) -> int:
        return len(self.edges)


def _edges_form_matching(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def check_matching(tr: Transversal) -> bool:
    """True iff no two transversal edges share an endpoint (recomputed)."""
    return _edges_form_matching(tr.edges)


def odd_cycle_transversal(f: FullereneGraph) -> Transversal:
    """Minimum odd cycle transversal via the dual minimum T-join."""
    d = dual(f)
    join = min_tjoin(d.base, d.terminals)
    assert d.to_primal_edge is not None
    edges = frozenset(d.to_primal_edge[e] for e in join.edges)
    assert len(edges) == join.value
    if _two_color(f.base, banned_edges=edges) is None:
        raise TransversalError("graph minus transversal is not bipartite")
    return Transversal(f, edges, join, _edges_form_matching(edges))


@dataclass(frozen=True, eq=False)
class IndependentSetResult:
    """An independent set with the trace of how it was derived."""

    fullerene: FullereneGraph
    vertices: frozenset[int]
    removed: tuple[int, ...]
    side: int
    augmented: tuple[int, ...]

    def __post_init__(self):
        g = self.fullerene.base
        for v in self.vertices:
            for u in g.rotation[v]:
                if u in self.vertices:
                    raise TransversalError(f"set is not independent: edge {u},{v}")
        if self.size < alpha_lower_bound(g.n):
            raise TransversalError(
                f"independent set of size {self.size} below the guaranteed bound"
            )

    @property
    def size(self) -> int:
        return len(self.vertices)


def alpha_lower_bound(n: int) -> int:
    """ceil(n/2 - sqrt(3n/5)) computed exactly."""
    return (n - math.isqrt(12 * n // 5) + 1) // 2


def _min_vertex_cover(edges: list[Edge]) -> frozenset[int]:
    """Exact minimum vertex cover of a small edge set (branching search)."""
    best: set[int] | None = None

    def recurse(idx: int, chosen: set[int]):
        nonlocal best
        if best is not None and len(chosen) >= len(best):
            return
        while idx < len(edges) and (edges[idx][0] in chosen or edges[idx][1] in chosen):
            idx += 1
        if idx == len(edges):
            best = set(chosen)
            return
        u, v = edges[idx]
        for pick in (min(u, v), max(u, v)):
            chosen.add(pick)
            recurse(idx + 1, chosen)
            chosen.remove(pick)

    recurse(0, set())
    assert best is not None
    return frozenset(best)


def independent_set(f: FullereneGraph, tr: Transversal) -> IndependentSetResult:
    """Delete one endpoint per transversal edge, 2-colour the rest, take the
    larger side and augment greedily.

    Per edge, the endpoint with the larger residual degree is removed (ties
    to the lower id), which leaves the low-degree survivors that the greedy
    augmentation can still use; when the transversal is not a matching, an
    exact vertex cover of it is removed instead.
    """
    g = f.base
    if tr.is_matching:
        removed: set[int] = set()
        for a, b in sorted(tr.edges):
            res_a = g.degree(a) - sum(1 for u in g.rotation[a] if u in removed)
            res_b = g.degree(b) - sum(1 for u in g.rotation[b] if u in removed)
            if res_a > res_b:
                removed.add(a)
            elif res_b > res_a:
                removed.add(b)
            else:
                removed.add(min(a, b))
    else:
        removed = set(_min_vertex_cover(sorted(tr.edges)))
    color = _two_color(g, banned_vertices=frozenset(removed))
    if color is None:
        raise TransversalError("vertex-deleted graph is not bipartite")
    sides = (
        {v for v in range(g.n) if color[v] == 0},
        {v for v in range(g.n) if color[v] == 1},
    )
    side = 0 if len(sides[0]) >= len(sides[1]) else 1
    chosen = set(sides[side])
    augmented = []
    for v in range(g.n):
        if v in chosen:
            continue
        if all(u not in chosen for u in g.rotation[v]):
            chosen.add(v)
            augmented.append(v)
    return IndependentSetResult(
        f, frozenset(chosen), tuple(sorted(removed)), side, tuple(augmented)
    )


def exact_mis(g: EmbeddedGraph, cap: int = 30) -> int:
    """Exact independence number by branch and bound on bitmasks."""
    if g.n > cap:
        raise TooLargeError(f"n = {g.n} exceeds the exact-MIS cap {cap}")
    adj = [0] * g.n
    for v in range(g.n):
        for u in g.rotation[v]:
            adj[v] |= 1 << u
    best = 0

    def recurse(avail: int, size: int):
        nonlocal best
        if size + avail.bit_count() <= best:
            return
        if avail == 0:
            best = size
            return
        # Branch on the densest available vertex: include it or drop it.
        v = max(
            (x for x in range(g.n) if avail >> x & 1),
            key=lambda x: ((adj[x] & avail).bit_count(), -x),
        )
        recurse(avail & ~(adj[v] | 1 << v), size + 1)
        recurse(avail & ~(1 << v), size)

    recurse((1 << g.n) - 1, 0)
    return best


def _state(lhs: int, rhs: int) -> str:
    """Tri-state for an inequality lhs <= rhs given exactly."""
    if lhs < rhs:
        return "holds"
    if lhs == rhs:
        return "equality"
    return "violated"


def bounds_report(
    f: FullereneGraph,
    tr: Transversal,
    isr: IndependentSetResult,
    exact_alpha: int | None = None,
) -> dict:
    """All non-spectral bound rows for one graph, exact tri-state checks."""
    n = f.n
    tau = tr.value
    size = isr.size
    diam = diameter(f.base)
    best_alpha = max(size, exact_alpha or 0)
    if 2 * size <= n and 5 * (n - 2 * size) ** 2 == 12 * n:
        alpha_state = "equality"
    elif size >= alpha_lower_bound(n):
        alpha_state = "holds"
    else:
        alpha_state = "violated"
    return {
        "n": n,
        "m": f.m,
        "tau_odd": tau,
        "tau_sqrt_bound": math.sqrt(12 * n / 5),
        "tau_sqrt_check": _state(5 * tau * tau, 12 * n),
        "tau_cubic_planar_bound": (9 * n + 18) / 32,
        "tau_cubic_planar_check": _state(32 * tau, 9 * n + 18),
        "tau_cubic_bound": 3 * n / 10,
        "tau_cubic_check": _state(10 * tau, 3 * n),
        "is_matching": tr.is_matching,
        "independent_set_size": size,
        "alpha_bound": alpha_lower_bound(n),
        "alpha_check": alpha_state,
        "alpha_three_eighths": (3 * n + 7) // 8,
        "diameter": diam,
        "diameter_bound": n / 5 + 1,
        "diameter_check": _state(5 * diam, n + 5),
        "graffiti_check": _state(2 * (diam - 1), best_alpha),
    }

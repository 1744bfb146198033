"""Subdivision and refinement of plane triangulations.

The refinement of a triangulation subdivides every edge and joins the three
subdivision vertices inside each face, producing a triangulation with four
times as many faces in which every new vertex has degree 6.  Terminal sets
(the degree-5 vertices) are therefore preserved.

Subdivision vertex ids are allocated after the original ids, in sorted edge
order, so refined graphs are byte-reproducible.
"""

from __future__ import annotations

from fulleroct.graph import (
    Edge,
    EmbeddedGraph,
    GraphError,
    Triangulation,
    edge_key,
)


class RefinedTriangulation:
    """A triangulation together with its refinement and the origin map.

    Vertices ``0..origin.n-1`` of the refinement are the original vertices
    (ids unchanged); vertex ``origin.n + i`` subdivides ``subdivided_edge[i]``.
    """

    __slots__ = ("base", "origin", "subdivided_edge")

    def __init__(
        self,
        base: Triangulation,
        origin: Triangulation,
        subdivided_edge: tuple[Edge, ...],
    ):
        self.base = base
        self.origin = origin
        self.subdivided_edge = subdivided_edge
        if base.n != origin.n + len(subdivided_edge):
            raise GraphError("origin map size mismatch")
        if base.terminals != origin.terminals:
            raise GraphError("refinement changed the terminal set")
        for i in range(origin.n, base.n):
            if base.base.degree(i) != 6:
                raise GraphError(f"subdivision vertex {i} has degree != 6")
        if len(base.base.faces()) != 4 * len(origin.base.faces()):
            raise GraphError("refinement face count is not 4f")

    @property
    def n_original(self) -> int:
        return self.origin.n

    def is_subdivision_vertex(self, v: int) -> bool:
        return v >= self.origin.n

    def origin_edge(self, v: int) -> Edge:
        """The origin edge a subdivision vertex splits."""
        return self.subdivided_edge[v - self.origin.n]

    def __repr__(self) -> str:
        return f"RefinedTriangulation(n={self.base.n}, origin n={self.origin.n})"


def _subdivision_ids(g: EmbeddedGraph) -> dict[Edge, int]:
    return {e: g.n + i for i, e in enumerate(g.edges)}


def subdivide_graph(g: EmbeddedGraph) -> EmbeddedGraph:
    """Replace every edge by a path of length 2.  The result is bipartite
    (original vertices against subdivision vertices)."""
    w = _subdivision_ids(g)
    rotation: list[tuple[int, ...]] = [
        tuple(w[edge_key(v, u)] for u in g.rotation[v]) for v in range(g.n)
    ]
    for u, v in g.edges:
        rotation.append((u, v))
    return EmbeddedGraph(rotation)


def subdivide(t: Triangulation) -> EmbeddedGraph:
    return subdivide_graph(t.base)


def _third_vertex(g: EmbeddedGraph, u: int, v: int) -> int:
    """Apex of the triangle on the left of directed edge (u, v)."""
    face = g.faces()[g.face_of(u, v)]
    for x in face:
        if x != u and x != v:
            return x
    raise GraphError(f"degenerate face at edge ({u}, {v})")


def refine_graph(g: EmbeddedGraph) -> tuple[EmbeddedGraph, tuple[Edge, ...]]:
    """Refinement of an arbitrary plane triangulation.

    Returns the refined graph and, for each subdivision vertex in id order,
    the edge of g it splits.  Raises GraphError if g is not a triangulation.
    """
    for face in g.faces():
        if len(face) != 3:
            raise GraphError("refine requires a triangulation")
    w = _subdivision_ids(g)
    rotation: list[tuple[int, ...]] = [
        tuple(w[edge_key(v, u)] for u in g.rotation[v]) for v in range(g.n)
    ]
    for u, v in g.edges:
        x1 = _third_vertex(g, u, v)
        x2 = _third_vertex(g, v, u)
        # Around the subdivision vertex of uv, the four inner-triangle
        # partners interleave with u and v following the face at (u, v)
        # on one side and the face at (v, u) on the other.
        rotation.append(
            (
                u,
                w[edge_key(u, x2)],
                w[edge_key(x2, v)],
                v,
                w[edge_key(v, x1)],
                w[edge_key(x1, u)],
            )
        )
    return EmbeddedGraph(rotation), g.edges


def refine(t: Triangulation) -> RefinedTriangulation:
    refined, subdivided = refine_graph(t.base)
    return RefinedTriangulation(Triangulation(refined), t, subdivided)

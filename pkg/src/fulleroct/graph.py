"""Embedded planar graph core: rotation systems, faces, duals and codecs.

A plane graph is stored as a rotation system: for every vertex, the
counterclockwise cyclic order of its neighbours.  Faces are recovered by the
usual trace rule (follow the reverse edge, then turn to the next edge
clockwise), which matches the planar_code convention, so files produced by
standard generators load with their embedding intact.

Vertex ids are 0-based everywhere except inside the codecs, which speak the
1-based planar_code / adjlist formats.  Edges are identified by their
normalised endpoint pair ``(min(u, v), max(u, v))``.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

PLANAR_CODE_HEADER = b">>planar_code<<"


class GraphError(ValueError):
    """Base class for structural errors raised by this package."""


class PlanarCodeError(GraphError):
    """Malformed planar_code input; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class FullereneValidationError(GraphError):
    """A graph failed fullerene validation; subclasses name the clause."""


class DisconnectedError(FullereneValidationError):
    pass


class NotCubicError(FullereneValidationError):
    def __init__(self, vertex: int, degree: int):
        super().__init__(f"vertex {vertex} has degree {degree}, expected 3")
        self.vertex = vertex
        self.degree = degree


class BadFaceSizeError(FullereneValidationError):
    def __init__(self, face_index: int, size: int):
        super().__init__(f"face {face_index} has size {size}, expected 5 or 6")
        self.face_index = face_index
        self.size = size


class BridgeError(FullereneValidationError):
    def __init__(self, edge: Edge):
        super().__init__(f"edge {edge} is a bridge")
        self.edge = edge


class DualNotSimpleError(GraphError):
    """Parallel dual edges: the primal graph is not 3-connected."""


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class EmbeddedGraph:
    """A simple connected plane graph given by its rotation system.

    Construction validates simplicity, adjacency symmetry, connectivity and
    Euler's formula (genus 0).  Instances are immutable after construction
    and safe to share across workers.
    """

    __slots__ = ("n", "rotation", "_edges", "_pos", "_faces", "_face_of")

    def __init__(self, rotation: Sequence[Sequence[int]]):
        rot = tuple(tuple(nbrs) for nbrs in rotation)
        n = len(rot)
        if n == 0:
            raise GraphError("graph must have at least one vertex")
        seen_edges: set[Edge] = set()
        for v, nbrs in enumerate(rot):
            local = set()
            for u in nbrs:
                if not 0 <= u < n:
                    raise GraphError(f"vertex {v} lists out-of-range neighbour {u}")
                if u == v:
                    raise GraphError(f"loop at vertex {v}")
                if u in local:
                    raise GraphError(f"repeated neighbour {u} at vertex {v}")
                local.add(u)
                seen_edges.add(edge_key(u, v))
        for u, v in seen_edges:
            if u not in rot[v] or v not in rot[u]:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.rotation = rot
        self._edges: tuple[Edge, ...] | None = None
        self._pos: tuple[dict[int, int], ...] | None = None
        self._faces: tuple[tuple[int, ...], ...] | None = None
        self._face_of: dict[tuple[int, int], int] | None = None
        if not self._connected():
            raise GraphError("graph is not connected")
        # Genus check: a rotation system of genus > 0 is rejected here so
        # every EmbeddedGraph is guaranteed to be a plane graph.
        f = len(self.faces()) if self.m else 1
        if self.n - self.m + f != 2:
            raise GraphError(
                f"rotation system is not planar: n={self.n} m={self.m} f={f}"
            )

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            es = {edge_key(u, v) for v, nbrs in enumerate(self.rotation) for u in nbrs}
            self._edges = tuple(sorted(es))
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.rotation)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u]

    def neighbor_index(self, v: int, u: int) -> int:
        if self._pos is None:
            self._pos = tuple(
                {u: i for i, u in enumerate(nbrs)} for nbrs in self.rotation
            )
        return self._pos[v][u]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EmbeddedGraph) and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash(self.rotation)

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, m={self.m})"

    def _connected(self) -> bool:
        seen = bytearray(self.n)
        stack = [0]
        seen[0] = 1
        count = 1
        while stack:
            v = stack.pop()
            for u in self.rotation[v]:
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    stack.append(u)
        return count == self.n

    # -- faces -------------------------------------------------------------

    def face_next(self, u: int, v: int) -> tuple[int, int]:
        """Successor of directed edge (u, v): the next edge clockwise after
        the reverse edge (v, u) in the rotation at v."""
        i = self.neighbor_index(v, u)
        return v, self.rotation[v][i - 1]

    def faces(self) -> tuple[tuple[int, ...], ...]:
        """All face cycles; each directed edge lies on exactly one face."""
        if self._faces is None:
            visited: set[tuple[int, int]] = set()
            out: list[tuple[int, ...]] = []
            face_of: dict[tuple[int, int], int] = {}
            for v0 in range(self.n):
                for u0 in self.rotation[v0]:
                    if (v0, u0) in visited:
                        continue
                    cycle: list[int] = []
                    e = (v0, u0)
                    while e not in visited:
                        visited.add(e)
                        face_of[e] = len(out)
                        cycle.append(e[0])
                        e = self.face_next(*e)
                    out.append(tuple(cycle))
            self._faces = tuple(out)
            self._face_of = face_of
        return self._faces

    def face_of(self, u: int, v: int) -> int:
        self.faces()
        assert self._face_of is not None
        return self._face_of[(u, v)]

    def find_bridge(self) -> Edge | None:
        """First bridge in DFS-tree order, or None if 2-edge-connected."""
        n = self.n
        disc = [-1] * n
        low = [0] * n
        parent = [-1] * n
        nxt = [0] * n
        order: list[int] = []
        stack = [0]
        disc[0] = low[0] = 0
        timer = 1
        while stack:
            v = stack[-1]
            nbrs = self.rotation[v]
            if nxt[v] < len(nbrs):
                u = nbrs[nxt[v]]
                nxt[v] += 1
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    parent[u] = v
                    order.append(u)
                    stack.append(u)
                elif u != parent[v]:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent[v] != -1:
                    low[parent[v]] = min(low[parent[v]], low[v])
        for v in order:
            if low[v] > disc[parent[v]]:
                return edge_key(parent[v], v)
        return None


def from_faces(n: int, faces: Iterable[Sequence[int]]) -> EmbeddedGraph:
    """Build a rotation system from a consistently oriented face list.

    Every undirected edge must appear in exactly two faces, once per
    direction.  The rotation at v is recovered by chaining the rule that in
    a face (..., u, v, w, ...) the neighbour u is the rotation successor of
    w at v.
    """
    succ: dict[int, dict[int, int]] = {v: {} for v in range(n)}
    for face in faces:
        k = len(face)
        for i in range(k):
            u, v, w = face[i], face[(i + 1) % k], face[(i + 2) % k]
            if w in succ[v]:
                raise GraphError(
                    f"faces are not consistently oriented at vertex {v}"
                )
            succ[v][w] = u
    rotation: list[tuple[int, ...]] = []
    for v in range(n):
        nbrs = succ[v]
        if not nbrs:
            raise GraphError(f"vertex {v} occurs in no face")
        start = min(nbrs)
        cycle = [start]
        cur = nbrs[start]
        while cur != start:
            cycle.append(cur)
            cur = nbrs[cur]
            if len(cycle) > len(nbrs):
                raise GraphError(f"rotation at vertex {v} is not a single cycle")
        if len(cycle) != len(nbrs):
            raise GraphError(f"rotation at vertex {v} is not a single cycle")
        rotation.append(tuple(cycle))
    return EmbeddedGraph(rotation)


class FullereneGraph:
    """A validated fullerene: cubic, bridgeless, plane, faces of size 5/6."""

    __slots__ = ("base", "faces", "pentagons", "hexagons")

    def __init__(
        self,
        base: EmbeddedGraph,
        faces: tuple[tuple[int, ...], ...],
        pentagons: tuple[int, ...],
        hexagons: tuple[int, ...],
    ):
        self.base = base
        self.faces = faces
        self.pentagons = pentagons
        self.hexagons = hexagons

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    def __repr__(self) -> str:
        return f"FullereneGraph(n={self.n})"


class Triangulation:
    """Plane triangulation with vertex degrees in {5, 6}.

    ``terminals`` is the set of degree-5 vertices (always 12 of them by
    Euler's formula).  When produced by :func:`dual`, the bijection between
    primal and dual edges is retained in ``to_primal_edge``.
    """

    __slots__ = ("base", "terminals", "primal", "to_primal_edge")

    def __init__(
        self,
        base: EmbeddedGraph,
        primal: FullereneGraph | None = None,
        to_primal_edge: dict[Edge, Edge] | None = None,
    ):
        for i, face in enumerate(base.faces()):
            if len(face) != 3:
                raise GraphError(f"face {i} has size {len(face)}, not a triangulation")
        terminals = []
        for v in range(base.n):
            d = base.degree(v)
            if d == 5:
                terminals.append(v)
            elif d != 6:
                raise GraphError(f"vertex {v} has degree {d}, expected 5 or 6")
        if len(terminals) != 12:
            raise GraphError(f"expected 12 degree-5 vertices, found {len(terminals)}")
        self.base = base
        self.terminals = frozenset(terminals)
        self.primal = primal
        self.to_primal_edge = to_primal_edge

    @property
    def n(self) -> int:
        return self.base.n

    def __repr__(self) -> str:
        return f"Triangulation(n={self.n})"


# -- planar_code codec -----------------------------------------------------


def _iter_graph_blocks(data: bytes, start: int) -> Iterator[tuple[list[list[int]], int]]:
    pos = start
    size = len(data)
    while pos < size:
        block_start = pos
        n = data[pos]
        pos += 1
        wide = False
        if n == 0:
            if pos + 2 > size:
                raise PlanarCodeError("truncated 16-bit vertex count", block_start)
            n = int.from_bytes(data[pos : pos + 2], "little")
            pos += 2
            wide = True
            if n == 0:
                raise PlanarCodeError("zero vertex count", block_start)
        rotation: list[list[int]] = []
        for v in range(n):
            nbrs: list[int] = []
            while True:
                if wide:
                    if pos + 2 > size:
                        raise PlanarCodeError(
                            f"truncated adjacency list of vertex {v + 1}", pos
                        )
                    entry = int.from_bytes(data[pos : pos + 2], "little")
                    pos += 2
                else:
                    if pos >= size:
                        raise PlanarCodeError(
                            f"truncated adjacency list of vertex {v + 1}", pos
                        )
                    entry = data[pos]
                    pos += 1
                if entry == 0:
                    break
                if entry > n:
                    raise PlanarCodeError(
                        f"vertex index {entry} out of range (n={n})",
                        pos - (2 if wide else 1),
                    )
                nbrs.append(entry - 1)
            rotation.append(nbrs)
        yield rotation, block_start


def parse_planar_code(data: bytes) -> list[EmbeddedGraph]:
    """Decode a planar_code byte stream into embedded graphs.

    The optional ASCII header is accepted; rotation order is preserved
    exactly as encoded.
    """
    start = 0
    if data.startswith(PLANAR_CODE_HEADER):
        start = len(PLANAR_CODE_HEADER)
    graphs = []
    for rotation, offset in _iter_graph_blocks(data, start):
        try:
            graphs.append(EmbeddedGraph(rotation))
        except GraphError as exc:
            raise PlanarCodeError(f"invalid graph: {exc}", offset) from exc
    return graphs


def write_planar_code(graphs: Iterable[EmbeddedGraph]) -> bytes:
    """Encode graphs in canonical planar_code form (header, minimal width)."""
    out = bytearray(PLANAR_CODE_HEADER)
    for g in graphs:
        if g.n > 0xFFFF:
            raise GraphError(f"graph too large for planar_code: n={g.n}")
        wide = g.n > 255
        if wide:
            out.append(0)
            out += g.n.to_bytes(2, "little")
        else:
            out.append(g.n)
        for nbrs in g.rotation:
            for u in nbrs:
                if wide:
                    out += (u + 1).to_bytes(2, "little")
                else:
                    out.append(u + 1)
            out += b"\x00\x00" if wide else b"\x00"
    return bytes(out)


def parse_adjlist(text: str) -> list[EmbeddedGraph]:
    """Decode the ASCII adjlist format: line i holds the rotation of vertex
    i as whitespace-separated 1-based ids, blank line between graphs."""
    graphs = []
    block: list[list[int]] = []
    for raw in text.splitlines() + [""]:
        line = raw.strip()
        if not line:
            if block:
                graphs.append(EmbeddedGraph([[u - 1 for u in row] for row in block]))
                block = []
            continue
        block.append([int(tok) for tok in line.split()])
    return graphs


def write_adjlist(graphs: Iterable[EmbeddedGraph]) -> str:
    chunks = []
    for g in graphs:
        if any(not nbrs for nbrs in g.rotation):
            # A degree-0 vertex would produce a blank line, which the format
            # reserves as the graph separator.
            raise GraphError("adjlist cannot encode isolated vertices")
        lines = [" ".join(str(u + 1) for u in nbrs) for nbrs in g.rotation]
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"


def graph_sha256(g: EmbeddedGraph) -> str:
    """Hash of the canonical planar_code encoding; used by certificates."""
    return hashlib.sha256(write_planar_code([g])).hexdigest()


# -- operations ------------------------------------------------------------


def faces(g: EmbeddedGraph) -> tuple[tuple[int, ...], ...]:
    return g.faces()


def validate_fullerene(g: EmbeddedGraph) -> FullereneGraph:
    """Validate the fullerene clauses and wrap, or raise the first violation."""
    if not isinstance(g, EmbeddedGraph):
        raise TypeError("validate_fullerene expects an EmbeddedGraph")
    # Connectivity is an EmbeddedGraph invariant; kept as an explicit clause
    # so the rejection order matches the documented contract.
    if not g._connected():
        raise DisconnectedError("graph is not connected")
    for v in range(g.n):
        if g.degree(v) != 3:
            raise NotCubicError(v, g.degree(v))
    fs = g.faces()
    pentagons = []
    hexagons = []
    for i, face in enumerate(fs):
        if len(face) == 5:
            pentagons.append(i)
        elif len(face) == 6:
            hexagons.append(i)
        else:
            raise BadFaceSizeError(i, len(face))
    bridge = g.find_bridge()
    if bridge is not None:
        raise BridgeError(bridge)
    assert len(pentagons) == 12, "Euler's formula forces exactly 12 pentagons"
    assert g.m == 3 * g.n // 2 and len(fs) == g.n // 2 + 2
    return FullereneGraph(g, fs, tuple(pentagons), tuple(hexagons))


def dual_embedded(g: EmbeddedGraph) -> tuple[EmbeddedGraph, dict[Edge, Edge]]:
    """Dual rotation system of a plane graph, plus the e* -> e bijection.

    Dual vertex i sits in face i; the rotation at i lists the faces across
    the face's edges in traversal order.  Raises DualNotSimpleError if two
    faces share more than one edge or a face is self-adjacent.
    """
    fs = g.faces()
    rotation: list[list[int]] = []
    dual_to_primal: dict[Edge, Edge] = {}
    for i, face in enumerate(fs):
        k = len(face)
        nbrs = []
        for j in range(k):
            u, v = face[j], face[(j + 1) % k]
            other = g.face_of(v, u)
            if other == i:
                raise DualNotSimpleError(f"face {i} is self-adjacent across {u},{v}")
            dkey = edge_key(i, other)
            pkey = edge_key(u, v)
            if dkey in dual_to_primal and dual_to_primal[dkey] != pkey:
                raise DualNotSimpleError(
                    f"parallel dual edges between faces {i} and {other}"
                )
            dual_to_primal[dkey] = pkey
            nbrs.append(other)
        rotation.append(nbrs)
    return EmbeddedGraph(rotation), dual_to_primal


def dual(f: FullereneGraph) -> Triangulation:
    """Dual triangulation of a fullerene, with the edge bijection retained."""
    dg, dual_to_primal = dual_embedded(f.base)
    return Triangulation(dg, primal=f, to_primal_edge=dual_to_primal)


def bfs_distances(g: EmbeddedGraph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            dv = dist[v]
            for u in g.rotation[v]:
                if dist[u] == -1:
                    dist[u] = dv + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def diameter(g: EmbeddedGraph) -> int:
    best = 0
    for v in range(g.n):
        best = max(best, max(bfs_distances(g, v)))
    return best

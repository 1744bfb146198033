"""Named fullerene fixtures and the extremal icosahedral family.

The extremal graphs on 60k^2 vertices are built dual-side: twelve
triangular-lattice disk charts of radius k, one per dodecahedron face, glued
along the subdivided dodecahedron edges, then dualised.  Chart boundary
points are owned by the lowest-numbered face that touches them, so vertex
numbering (and hence every serialised byte) is deterministic.
"""

from __future__ import annotations

import math

from fulleroct.graph import (
    EmbeddedGraph,
    FullereneGraph,
    Triangulation,
    dual_embedded,
    from_faces,
    validate_fullerene,
)

FIXTURE_NAMES = ("20:1", "24:1", "28:td", "36:drum", "40:40", "60:1812")


def _rotations_from_coords(
    n: int,
    coords: dict[int, tuple[float, float]],
    edges: list[tuple[int, int]],
) -> EmbeddedGraph:
    """Rotation system of a straight-line plane drawing (ccw angle order)."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rotation = []
    for v in range(n):
        x0, y0 = coords[v]
        rotation.append(
            tuple(
                sorted(
                    nbrs[v],
                    key=lambda u: math.atan2(coords[u][1] - y0, coords[u][0] - x0),
                )
            )
        )
    return EmbeddedGraph(rotation)


def _polar(r: float, degrees: float) -> tuple[float, float]:
    a = math.radians(degrees)
    return (r * math.cos(a), r * math.sin(a))


def _dodecahedron() -> EmbeddedGraph:
    # Schlegel drawing with three rings: inner pentagon, 10-ring, outer pentagon.
    coords: dict[int, tuple[float, float]] = {}
    for i in range(5):
        coords[i] = _polar(0.8, 54 + 72 * i)
    for j in range(10):
        coords[5 + j] = _polar(2.25 if j % 2 == 0 else 1.5, 90 + 36 * j)
    for i in range(5):
        coords[15 + i] = _polar(3.0, 90 + 72 * i)
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((15 + i, 15 + (i + 1) % 5))
        edges.append((i, 5 + (2 * i + 9) % 10))
        edges.append((15 + i, 5 + 2 * i))
    for j in range(10):
        edges.append((5 + j, 5 + (j + 1) % 10))
    return _rotations_from_coords(20, coords, edges)


def _drum24() -> EmbeddedGraph:
    # Hexagonal drum: two hexagon caps, twelve pentagons around the barrel.
    coords: dict[int, tuple[float, float]] = {}
    for i in range(6):
        coords[i] = _polar(1.0, 60 * i)
        coords[18 + i] = _polar(3.0, 60 * i + 30)
    for j in range(12):
        coords[6 + j] = _polar(2.0, 30 * j)
    edges = []
    for i in range(6):
        edges.append((i, (i + 1) % 6))
        edges.append((18 + i, 18 + (i + 1) % 6))
        edges.append((i, 6 + 2 * i))
        edges.append((18 + i, 6 + 2 * i + 1))
    for j in range(12):
        edges.append((6 + j, 6 + (j + 1) % 12))
    return _rotations_from_coords(24, coords, edges)


def _drum36() -> EmbeddedGraph:
    # As the 24-drum but with a ring of six hexagons between the caps.
    coords: dict[int, tuple[float, float]] = {}
    for i in range(6):
        coords[i] = _polar(1.0, 60 * i)
        coords[30 + i] = _polar(4.0, 60 * i)
    for j in range(12):
        coords[6 + j] = _polar(2.0, 30 * j)
        coords[18 + j] = _polar(3.0, 30 * j)
    edges = []
    for i in range(6):
        edges.append((i, (i + 1) % 6))
        edges.append((30 + i, 30 + (i + 1) % 6))
        edges.append((i, 6 + 2 * i))
        edges.append((30 + i, 18 + 2 * i))
    for j in range(12):
        edges.append((6 + j, 6 + (j + 1) % 12))
        edges.append((18 + j, 18 + (j + 1) % 12))
        if j % 2 == 1:
            edges.append((6 + j, 18 + j))
    return _rotations_from_coords(36, coords, edges)


def _c40_tetrahedral() -> EmbeddedGraph:
    """The 40-vertex isomer with tetrahedral symmetry, from its standard
    Schlegel drawing (centre vertex, three a/b/c rings, d and e rings)."""
    coords: dict[int, tuple[float, float]] = {0: (0.0, 0.0)}
    a_r = [0.5, 0.8, 0.8, 0.5, 0.8, 0.8, 0.5, 0.8, 0.8]
    for i in range(9):
        coords[1 + i] = _polar(a_r[i], 90 + 40 * i)
    b_angles = [90, 110, 190, 210, 230, 310, 330, 350, 70]
    b_r = [1.5, 1.3, 1.3, 1.5, 1.3, 1.3, 1.5, 1.3, 1.3]
    for j in range(9):
        coords[10 + j] = _polar(b_r[j], b_angles[j])
    c_angles = [90, 135, 165, 210, 255, 285, 330, 15, 45]
    for j in range(9):
        coords[19 + j] = _polar(2.0, c_angles[j])
    for i in range(6):
        coords[28 + i] = _polar(2.5, 120 + 60 * i)
        coords[34 + i] = _polar(3.0, 120 + 60 * i)
    edges = [(0, 1), (0, 4), (0, 7)]
    for i in range(9):
        edges.append((1 + i, 1 + (i + 1) % 9))
    # Three arms of four b-vertices each, hanging between a-ring vertices.
    edges += [(9, 18), (18, 10), (10, 11), (11, 2)]
    edges += [(3, 12), (12, 13), (13, 14), (14, 5)]
    edges += [(6, 15), (15, 16), (16, 17), (17, 8)]
    for j in range(9):
        edges.append((10 + j, 19 + j))
    edges += [
        (19, 28), (28, 20), (20, 21), (21, 29), (29, 22),
        (22, 30), (30, 23), (23, 24), (24, 31), (31, 25),
        (25, 32), (32, 26), (26, 27), (27, 33), (33, 19),
    ]
    for i in range(6):
        edges.append((28 + i, 34 + i))
        edges.append((34 + i, 34 + (i + 1) % 6))
    return _rotations_from_coords(40, coords, edges)


def _k4() -> EmbeddedGraph:
    return from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])


def truncate(g: EmbeddedGraph) -> EmbeddedGraph:
    """Vertex truncation: each vertex becomes a polygon of its corners."""
    offset = [0] * g.n
    for v in range(1, g.n):
        offset[v] = offset[v - 1] + g.degree(v - 1)
    total = offset[-1] + g.degree(g.n - 1)

    def corner(v: int, u: int) -> int:
        return offset[v] + g.neighbor_index(v, u)

    new_faces: list[tuple[int, ...]] = []
    for v in range(g.n):
        new_faces.append(tuple(offset[v] + i for i in range(g.degree(v))))
    for face in g.faces():
        k = len(face)
        cycle: list[int] = []
        for a in range(k):
            u, w = face[a], face[(a + 1) % k]
            cycle.append(corner(u, w))
            cycle.append(corner(w, u))
        new_faces.append(tuple(cycle))
    return from_faces(total, new_faces)


def kis(g: EmbeddedGraph, fill_sizes: frozenset[int] | set[int]) -> EmbeddedGraph:
    """Stellate every face whose size is in fill_sizes with a centre vertex."""
    old_faces = g.faces()
    next_id = g.n
    new_faces: list[tuple[int, ...]] = []
    for face in old_faces:
        if len(face) in fill_sizes:
            z = next_id
            next_id += 1
            for a in range(len(face)):
                new_faces.append((face[a], face[(a + 1) % len(face)], z))
        else:
            new_faces.append(face)
    return from_faces(next_id, new_faces)


def tetrakis_triangulation() -> Triangulation:
    """kis(truncated tetrahedron): the smallest {5,6} triangulation whose
    twelve 5-vertices fall into four mutually adjacent triples."""
    return Triangulation(kis(truncate(_k4()), {6}))


# -- extremal icosahedral family --------------------------------------------


def icosahedral_dual(k: int) -> Triangulation:
    """Geodesic triangulation with 60k^2 faces: twelve radius-k disk charts
    glued along the dodecahedron's face structure.  The twelve degree-5
    apexes are vertices 0..11 and sit at pairwise distance >= 2k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    dodeca = validate_fullerene(_dodecahedron())
    pent = dodeca.faces

    next_id = 12
    dodeca_vid: dict[int, int] = {}
    edge_pts: dict[tuple[int, int], list[int]] = {}

    def alloc() -> int:
        nonlocal next_id
        next_id += 1
        return next_id - 1

    triangles: list[tuple[int, int, int]] = []
    for f, cycle in enumerate(pent):
        # rings[i][pos]: global id of ring-i lattice point, pos in 0..5i-1.
        rings: list[list[int]] = [[f]]
        for i in range(1, k):
            rings.append([alloc() for _ in range(5 * i)])
        boundary: list[int] = []
        for pos in range(5 * k):
            c, j = divmod(pos, k)
            v, w = cycle[c], cycle[(c + 1) % 5]
            if j == 0:
                if v not in dodeca_vid:
                    dodeca_vid[v] = alloc()
                boundary.append(dodeca_vid[v])
            else:
                key = (v, w) if v < w else (w, v)
                if key not in edge_pts:
                    pts = [alloc() for _ in range(k - 1)]
                    # store indexed 1..k-1 from the lower endpoint's side
                    edge_pts[key] = pts if v < w else pts[::-1]
                boundary.append(edge_pts[key][(j if v < w else k - j) - 1])
        rings.append(boundary)

        for c in range(5):
            triangles.append((f, rings[1][c], rings[1][(c + 1) % 5]))
        for i in range(1, k):
            ri, ro = rings[i], rings[i + 1]
            li, lo = 5 * i, 5 * (i + 1)
            for c in range(5):
                for j in range(i + 1):
                    q = ri[(c * i + j) % li]
                    triangles.append(
                        (q, ro[(c * (i + 1) + j) % lo], ro[(c * (i + 1) + j + 1) % lo])
                    )
                for j in range(i):
                    triangles.append(
                        (
                            ri[(c * i + j) % li],
                            ro[(c * (i + 1) + j + 1) % lo],
                            ri[(c * i + j + 1) % li],
                        )
                    )

    base = from_faces(next_id, triangles)
    tri = Triangulation(base)
    assert tri.terminals == frozenset(range(12))
    return tri


def icosahedral_fullerene(k: int) -> FullereneGraph:
    """The fullerene on 60k^2 vertices with full icosahedral symmetry."""
    base, _ = dual_embedded(icosahedral_dual(k).base)
    return validate_fullerene(base)


def named_fixture(name: str) -> FullereneGraph:
    """Bundled fullerenes: the dodecahedron 20:1, the tetrahedral isomers
    28:td and 40:40, the drums 24:1 and 36:drum, and buckminsterfullerene
    60:1812."""
    if name == "20:1":
        return validate_fullerene(_dodecahedron())
    if name == "24:1":
        return validate_fullerene(_drum24())
    if name == "28:td":
        base, _ = dual_embedded(tetrakis_triangulation().base)
        return validate_fullerene(base)
    if name == "36:drum":
        return validate_fullerene(_drum36())
    if name == "40:40":
        return validate_fullerene(_c40_tetrahedral())
    if name == "60:1812":
        icosa, _ = dual_embedded(_dodecahedron())
        return validate_fullerene(truncate(icosa))
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")

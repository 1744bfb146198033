"""Patches, moats, isoperimetric checks and moat-packing certificates.

A moat of width k around a vertex set X is the union of the first k
concentric cuts delta(N^i[X]); a disk is a moat around a single terminal.
A packing of edge-disjoint moats whose cores form a laminar family of odd
terminal count certifies a lower bound on the minimum T-join of the
triangulation the refinement came from: each layer is a T-cut, T-cuts are
packed disjointly, and halving translates the refined bound back.

Certificate arithmetic is exact (fractions.Fraction); the thirds and fifths
contributed by 3- and 5-moats must never drift.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from fulleroct.graph import Edge, EmbeddedGraph, GraphError, Triangulation
from fulleroct.refine import RefinedTriangulation


class MoatError(GraphError):
    pass


class NotAPatchError(MoatError):
    pass


class PatchRangeError(MoatError):
    pass


class AnnulusTerminalError(MoatError):
    pass


class MoatEscapesError(MoatError):
    pass


class FormulaViolationError(MoatError):
    """A proved counting identity failed on the given input."""


class OverlappingMoatsError(MoatError):
    def __init__(self, edge: Edge):
        super().__init__(f"moats overlap on edge {edge}")
        self.edge = edge


class NotLaminarError(MoatError):
    def __init__(self, first: int, second: int):
        super().__init__(f"cores of moats {first} and {second} properly cross")
        self.pair = (first, second)


class BadParityError(MoatError):
    def __init__(self, core: frozenset[int], detail: str):
        super().__init__(f"core {sorted(core)}: {detail}")
        self.core = core


class WidthMismatchError(MoatError):
    pass


class PackingFormError(MoatError):
    """Optimal-form checks failed (non-disk 1-moat or radius-0 terminal)."""


# -- patches -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Patch:
    """2-connected induced subgraph whose faces are triangles except the
    outer one.  A single vertex is accepted as a degenerate seed patch with
    empty boundary and zero area."""

    tri: Triangulation
    vertices: frozenset[int]
    boundary: tuple[int, ...]
    p: int
    area: int


def _induced(g: EmbeddedGraph, X: Sequence[int]) -> tuple[EmbeddedGraph, list[int]]:
    order = sorted(X)
    index = {v: i for i, v in enumerate(order)}
    rotation = [
        tuple(index[u] for u in g.rotation[v] if u in index) for v in order
    ]
    return EmbeddedGraph(rotation), order


def _has_cut_vertex(g: EmbeddedGraph) -> bool:
    if g.n <= 2:
        return False
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    nxt = [0] * g.n
    children = [0] * g.n
    stack = [0]
    disc[0] = low[0] = 0
    timer = 1
    while stack:
        v = stack[-1]
        nbrs = g.rotation[v]
        if nxt[v] < len(nbrs):
            u = nbrs[nxt[v]]
            nxt[v] += 1
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                parent[u] = v
                children[v] += 1
                stack.append(u)
            elif u != parent[v]:
                low[v] = min(low[v], disc[u])
        else:
            stack.pop()
            p = parent[v]
            if p != -1:
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    return True
    return children[0] > 1


def patch_from_vertices(t: Triangulation, X: Iterable[int]) -> Patch:
    """Validate X as a patch of t and compute boundary, area and p."""
    vs = frozenset(X)
    if not vs:
        raise NotAPatchError("empty vertex set")
    for v in vs:
        if not 0 <= v < t.n:
            raise NotAPatchError(f"vertex {v} out of range")
    if len(vs) == 1:
        (u,) = vs
        return Patch(t, vs, (), 1 if u in t.terminals else 0, 0)
    try:
        sub, order = _induced(t.base, sorted(vs))
    except GraphError as exc:
        raise NotAPatchError(f"induced subgraph invalid: {exc}") from exc
    if _has_cut_vertex(sub):
        raise NotAPatchError("induced subgraph is not 2-connected")
    fs = sub.faces()
    non_tri = [f for f in fs if len(f) != 3]
    if len(non_tri) == 1:
        outer = non_tri[0]
    elif not non_tri and sub.n == 3 and sub.m == 3:
        outer = fs[0]  # a single triangle: both faces are triangles
    else:
        raise NotAPatchError(
            f"expected exactly one non-triangular face, found {len(non_tri)}"
        )
    if len(set(outer)) != len(outer):
        raise NotAPatchError("outer face is not a simple cycle")
    boundary = tuple(order[v] for v in outer)
    area = len(fs) - 1
    interior = vs - set(boundary)
    p = len(interior & t.terminals)
    return Patch(t, vs, boundary, p, area)


@dataclass(frozen=True)
class JustusResult:
    holds: bool
    equality: bool
    slack: float


def justus_check(patch: Patch) -> JustusResult:
    """Isoperimetric inequality |V(C)| >= sqrt((6-p) A), exact comparison."""
    if not 1 <= patch.p <= 5:
        raise PatchRangeError(f"p = {patch.p} outside 1..5")
    lhs_sq = len(patch.boundary) ** 2
    rhs_sq = (6 - patch.p) * patch.area
    return JustusResult(
        holds=lhs_sq >= rhs_sq,
        equality=lhs_sq == rhs_sq,
        slack=len(patch.boundary) - math.sqrt(rhs_sq),
    )


# -- moats -------------------------------------------------------------------


@dataclass(frozen=True)
class Moat:
    """Width-k moat: the union of layers delta(N^i[X]), i < k."""

    core: frozenset[int]
    width: int
    edges: frozenset[Edge]
    terminal_count: int


def _distances_from(g: EmbeddedGraph, X: Iterable[int]) -> list[int]:
    dist = [-1] * g.n
    frontier = sorted(set(X))
    for v in frontier:
        dist[v] = 0
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


def _moat_edges_from_dist(g: EmbeddedGraph, dist: list[int], k: int) -> frozenset[Edge]:
    # An edge joins levels i and i+1 (never skips), so it lies in the single
    # layer delta(N^i[X]); the union over i < k is a plain level filter.
    return frozenset(
        (u, v) for u, v in g.edges if dist[u] != dist[v] and min(dist[u], dist[v]) < k
    )


def moat_edges(t: Triangulation, X: Iterable[int], k: int) -> frozenset[Edge]:
    """Edge set of the width-k moat around X."""
    core = set(X)
    if not core:
        raise MoatError("empty core")
    if k < 1:
        raise MoatError(f"width must be >= 1, got {k}")
    dist = _distances_from(t.base, core)
    if all(0 <= d <= k - 1 for d in dist):
        raise MoatEscapesError(f"N^{k - 1}[X] covers the whole graph")
    return _moat_edges_from_dist(t.base, dist, k)


@dataclass(frozen=True)
class DiskCheck:
    ok: bool
    precondition_ok: bool
    expected: int
    actual: int
    offending_edge: Edge | None


def disk_size_check(t: Triangulation, u: int, k: int) -> DiskCheck:
    """Check |delta^k(u)| = 5k^2 for a terminal whose width-k moat stays
    clear of other terminals (no other terminal within distance k)."""
    if u not in t.terminals:
        raise MoatError(f"vertex {u} is not a terminal")
    dist = _distances_from(t.base, [u])
    edges = moat_edges(t, [u], k)
    offender = None
    for w in sorted(t.terminals - {u}):
        if dist[w] <= k:
            for e in sorted(edges):
                if w in e:
                    offender = e
                    break
            break
    precondition_ok = offender is None
    actual = len(edges)
    ok = precondition_ok and actual == 5 * k * k
    return DiskCheck(ok, precondition_ok, 5 * k * k, actual, offender)


def _annulus_terminal(
    t: Triangulation, dist: list[int], boundary: Iterable[int], lo: int, hi: int
) -> int | None:
    """First terminal on the boundary cycle or in rings lo..hi, if any."""
    bset = set(boundary)
    for w in sorted(t.terminals):
        if w in bset or lo <= dist[w] <= hi:
            return w
    return None


def ring_growth(t: Triangulation, X: Iterable[int], k: int) -> int:
    """|N^k(X)| for a patch core, asserted equal to |V(C)| + (6-p)k.

    The boundary cycle and the first k rings must be terminal-free (a
    degenerate single-terminal core has an empty boundary and p = 1)."""
    patch = patch_from_vertices(t, X)
    if not 0 < patch.p < 6:
        raise PatchRangeError(f"p = {patch.p} outside 1..5")
    dist = _distances_from(t.base, patch.vertices)
    if k < 1:
        raise MoatError(f"k must be >= 1, got {k}")
    w = _annulus_terminal(t, dist, patch.boundary, 1, k)
    if w is not None:
        raise AnnulusTerminalError(f"terminal {w} inside the annulus")
    computed = sum(1 for d in dist if d == k)
    if computed == 0:
        raise MoatEscapesError(f"N^{k}(X) is empty")
    predicted = len(patch.boundary) + (6 - patch.p) * k
    if computed != predicted:
        raise FormulaViolationError(
            f"|N^{k}(X)| = {computed}, formula predicts {predicted}"
        )
    return computed


@dataclass(frozen=True)
class PerimeterBound:
    value: float
    ceiling: int
    moat_size: int


def patch_perimeter_bound(patch: Patch, k: int) -> PerimeterBound:
    """Isoperimetric lower bound (6-p)k^2 + 2k sqrt((6-p)A) for |delta^k(X)|,
    verified exactly against the actual moat on the patch's triangulation."""
    if k == 0:
        return PerimeterBound(0.0, 0, 0)
    if k < 0:
        raise MoatError(f"k must be >= 0, got {k}")
    if not 0 < patch.p < 6:
        raise PatchRangeError(f"p = {patch.p} outside 1..5")
    t = patch.tri
    dist = _distances_from(t.base, patch.vertices)
    w = _annulus_terminal(t, dist, patch.boundary, 1, k - 1)
    if w is not None:
        raise AnnulusTerminalError(f"terminal {w} inside the annulus")
    size = len(moat_edges(t, patch.vertices, k))
    q = 6 - patch.p
    bound = q * k * k + 2 * k * math.sqrt(q * patch.area)
    # Exact check of size >= qk^2 + 2k sqrt(qA):
    #   size - qk^2 >= 0 and (size - qk^2)^2 >= 4 k^2 q A.
    head = size - q * k * k
    if head < 0 or head * head < 4 * k * k * q * patch.area:
        raise FormulaViolationError(
            f"moat size {size} below the perimeter bound {bound:.6f}"
        )
    return PerimeterBound(bound, math.ceil(bound - 1e-12), size)


# -- packings ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MoatPacking:
    """A verified packing of disks, 3-moats and 5-moats over a refinement.

    Width vectors are keyed by terminal id (0 when the terminal has no moat
    of that class); m1/m3/m5 count edges per class.  ``value`` is the exact
    lower-bound certificate for the origin triangulation's minimum T-join.
    """

    moats: tuple[Moat, ...]
    r: dict[int, int]
    s: dict[int, int]
    t: dict[int, int]
    m1: int
    m3: int
    m5: int
    value: Fraction


def analyze_packing(
    rt: RefinedTriangulation,
    moats: Sequence[tuple[Iterable[int], int]],
    require_optimal_form: bool = False,
) -> MoatPacking:
    """Verify every packing invariant and assemble the certificate record.

    Checks, in order: odd terminal count in every layer of every moat (each
    layer must be a T-cut), pairwise edge-disjointness, laminarity of the
    cores, and per-terminal uniqueness of the moat of each class.
    """
    g = rt.base.base
    terminals = rt.base.terminals
    built: list[Moat] = []
    for core_in, width in moats:
        core = frozenset(core_in)
        if not core or not all(0 <= v < g.n for v in core):
            raise MoatError(f"invalid core {sorted(core_in)}")
        if width < 1:
            raise WidthMismatchError(f"core {sorted(core)}: width {width} < 1")
        p = len(core & terminals)
        if p not in (1, 3, 5):
            raise BadParityError(core, f"terminal count {p} not in {{1, 3, 5}}")
        dist = _distances_from(g, core)
        for i in range(width):
            inside = sum(1 for t in terminals if dist[t] <= i)
            if inside % 2 == 0:
                raise BadParityError(
                    core, f"layer {i} spans {inside} terminals (not a T-cut)"
                )
        if all(d <= width - 1 for d in dist):
            raise MoatEscapesError(f"core {sorted(core)} escapes at width {width}")
        built.append(Moat(core, width, _moat_edges_from_dist(g, dist, width), p))

    seen: set[Edge] = set()
    for moat in built:
        for e in sorted(moat.edges):
            if e in seen:
                raise OverlappingMoatsError(e)
            seen.add(e)

    for i in range(len(built)):
        for j in range(i + 1, len(built)):
            a, b = built[i].core, built[j].core
            if a & b and not (a <= b or b <= a):
                raise NotLaminarError(i, j)

    r = {t: 0 for t in sorted(terminals)}
    s = dict(r)
    tvec = dict(r)
    by_class = {1: r, 3: s, 5: tvec}
    for moat in built:
        vec = by_class[moat.terminal_count]
        for u in moat.core & terminals:
            if vec[u]:
                raise WidthMismatchError(
                    f"terminal {u} lies in two {moat.terminal_count}-moats"
                )
            vec[u] = moat.width

    if require_optimal_form:
        for moat in built:
            if moat.terminal_count == 1 and not moat.core <= terminals:
                raise PackingFormError(
                    f"1-moat core {sorted(moat.core)} is not a disk on a terminal"
                )
        for u, radius in r.items():
            if radius < 1:
                raise PackingFormError(f"terminal {u} has no disk")

    m1 = sum(len(m.edges) for m in built if m.terminal_count == 1)
    m3 = sum(len(m.edges) for m in built if m.terminal_count == 3)
    m5 = sum(len(m.edges) for m in built if m.terminal_count == 5)
    value = (
        Fraction(sum(r.values()))
        + Fraction(sum(s.values()), 3)
        + Fraction(sum(tvec.values()), 5)
    ) / 2
    return MoatPacking(tuple(built), r, s, tvec, m1, m3, m5, value)


def verify_packing(
    rt: RefinedTriangulation,
    moats: Sequence[tuple[Iterable[int], int]] | MoatPacking,
    require_optimal_form: bool = False,
) -> Fraction:
    """Check all packing invariants; on success return the exact certificate
    value (r + s/3 + t/5 summed over terminals, halved), a valid lower bound
    for the minimum T-join of the unrefined triangulation."""
    if isinstance(moats, MoatPacking):
        moats = [(m.core, m.width) for m in moats.moats]
    return analyze_packing(rt, moats, require_optimal_form).value


def greedy_packing(rt: RefinedTriangulation) -> MoatPacking:
    """Round-robin disk growing: each terminal's radius is raised while the
    disk stays clear of other terminals (distance > radius), stays edge-
    disjoint from the other disks, and does not swallow the graph.  Valid by
    construction but not necessarily optimal; tight on the extremal family."""
    g = rt.base.base
    terminals = sorted(rt.base.terminals)
    dist = {u: _distances_from(g, [u]) for u in terminals}
    radii = {u: 0 for u in terminals}
    disk = {u: frozenset() for u in terminals}

    def can_grow(u: int, k: int) -> frozenset[Edge] | None:
        du = dist[u]
        if any(du[w] <= k for w in terminals if w != u):
            return None
        if all(d <= k - 1 for d in du):
            return None
        cand = _moat_edges_from_dist(g, du, k)
        for w in terminals:
            if w != u and cand & disk[w]:
                return None
        return cand

    changed = True
    while changed:
        changed = False
        for u in terminals:
            cand = can_grow(u, radii[u] + 1)
            if cand is not None:
                radii[u] += 1
                disk[u] = cand
                changed = True
    return analyze_packing(
        rt, [({u}, radii[u]) for u in terminals if radii[u] >= 1]
    )


# -- certificate files -------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """On-disk moat-packing certificate (JSON)."""

    graph_sha256: str
    refined: bool
    moats: tuple[tuple[tuple[int, ...], int], ...]


def certificate_to_json(cert: Certificate) -> str:
    payload = {
        "graph_sha256": cert.graph_sha256,
        "refined": cert.refined,
        "moats": [
            {"core": list(core), "width": width} for core, width in cert.moats
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def certificate_from_json(text: str) -> Certificate:
    payload = json.loads(text)
    try:
        moats = tuple(
            (tuple(sorted(int(v) for v in entry["core"])), int(entry["width"]))
            for entry in payload["moats"]
        )
        return Certificate(str(payload["graph_sha256"]), bool(payload["refined"]), moats)
    except (KeyError, TypeError) as exc:
        raise MoatError(f"malformed certificate: {exc}") from exc


def packing_certificate(graph_sha256: str, packing: MoatPacking) -> Certificate:
    return Certificate(
        graph_sha256,
        True,
        tuple((tuple(sorted(m.core)), m.width) for m in packing.moats),
    )

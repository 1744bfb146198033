"""fulleroct: exact odd cycle transversals and certificates for fullerene graphs."""

from fulleroct.graph import (
    EmbeddedGraph,
    FullereneGraph,
    Triangulation,
    diameter,
    dual,
    faces,
    graph_sha256,
    parse_adjlist,
    parse_planar_code,
    validate_fullerene,
    write_adjlist,
    write_planar_code,
)
from fulleroct.goldberg import (
    FIXTURE_NAMES,
    icosahedral_dual,
    icosahedral_fullerene,
    named_fixture,
)
from fulleroct.moats import greedy_packing, verify_packing
from fulleroct.refine import RefinedTriangulation, refine, subdivide
from fulleroct.spectra import adjacency_spectrum, laplacian_spectrum, smallest_eigenvalue
from fulleroct.tjoin import brute_force_tjoin, min_tjoin, terminal_metric
from fulleroct.transversal import (
    bounds_report,
    exact_mis,
    independent_set,
    odd_cycle_transversal,
)

__all__ = [
    "EmbeddedGraph",
    "FullereneGraph",
    "Triangulation",
    "RefinedTriangulation",
    "FIXTURE_NAMES",
    "adjacency_spectrum",
    "bounds_report",
    "brute_force_tjoin",
    "diameter",
    "dual",
    "exact_mis",
    "faces",
    "graph_sha256",
    "greedy_packing",
    "icosahedral_dual",
    "icosahedral_fullerene",
    "independent_set",
    "laplacian_spectrum",
    "min_tjoin",
    "named_fixture",
    "odd_cycle_transversal",
    "parse_adjlist",
    "parse_planar_code",
    "refine",
    "smallest_eigenvalue",
    "subdivide",
    "terminal_metric",
    "validate_fullerene",
    "verify_packing",
    "write_adjlist",
    "write_planar_code",
]

__version__ = "0.1.0"

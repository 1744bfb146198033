"""Command-line surface: batch analysis, generation, certificates, spectra.

``analyze`` streams graphs from planar_code or adjlist files through the
full pipeline (validate, dualise, exact T-join, transversal, independent
set, optional spectra) and prints one JSON object per graph with a stable
key set.  Exit codes: 0 clean, 1 when any proved bound reports "violated"
or a certificate fails, 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from fulleroct.graph import (
    EmbeddedGraph,
    FullereneValidationError,
    GraphError,
    dual,
    graph_sha256,
    parse_adjlist,
    parse_planar_code,
    validate_fullerene,
    write_planar_code,
)
from fulleroct.goldberg import icosahedral_fullerene
from fulleroct.moats import (
    MoatError,
    certificate_from_json,
    certificate_to_json,
    greedy_packing,
    packing_certificate,
    verify_packing,
)
from fulleroct.refine import refine
from fulleroct.spectra import (
    adjacency_spectrum,
    laplacian_spectrum,
    lambda_min_bound,
)
from fulleroct.tjoin import min_tjoin
from fulleroct.transversal import (
    bounds_report,
    exact_mis,
    independent_set,
    odd_cycle_transversal,
)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_PARSE = 2

_REPORT_KEYS = (
    "index",
    "sha256",
    "n",
    "m",
    "tau_odd",
    "tau_sqrt_bound",
    "tau_sqrt_check",
    "tau_cubic_planar_bound",
    "tau_cubic_planar_check",
    "tau_cubic_bound",
    "tau_cubic_check",
    "is_matching",
    "independent_set_size",
    "alpha_bound",
    "alpha_check",
    "alpha_three_eighths",
    "diameter",
    "diameter_bound",
    "diameter_check",
    "graffiti_check",
    "lambda_min",
    "lambda_min_bound",
    "lambda_min_check",
    "maxcut_check",
    "certificate_value",
    "certificate_check",
    "timings",
)


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _cert_moats(cert) -> list[tuple[tuple[int, ...], int]]:
    """Certificate moats as refined-triangulation moats.

    Unrefined certificates (cores and widths on the dual triangulation
    itself) double their widths: original vertex ids survive refinement and
    refinement doubles distances, so the doubled moat spans the same
    terminal parities and certifies the same value."""
    if cert.refined:
        return list(cert.moats)
    return [(core, 2 * width) for core, width in cert.moats]


def _read_graphs(path: str, fmt: str) -> list[EmbeddedGraph]:
    if fmt == "planar_code":
        with open(path, "rb") as fh:
            return parse_planar_code(fh.read())
    with open(path, "r", encoding="ascii") as fh:
        return parse_adjlist(fh.read())


def _float_state(lhs: float, rhs: float, tol: float) -> str:
    if abs(lhs - rhs) <= tol:
        return "equality"
    return "holds" if lhs < rhs else "violated"


def _analyze_one(payload: tuple) -> dict:
    index, rotation, opts = payload
    clock = time.perf_counter
    timings: dict[str, float] = {}
    t0 = clock()
    g = EmbeddedGraph(rotation)
    f = validate_fullerene(g)
    timings["validate"] = clock() - t0

    t0 = clock()
    tr = odd_cycle_transversal(f)
    timings["tjoin"] = clock() - t0

    t0 = clock()
    isr = independent_set(f, tr)
    alpha = exact_mis(g) if g.n <= 30 else None
    timings["independent_set"] = clock() - t0

    report: dict = {"index": index, "sha256": graph_sha256(g)}
    report.update(bounds_report(f, tr, isr, exact_alpha=alpha))

    report["lambda_min"] = None
    report["lambda_min_bound"] = None
    report["lambda_min_check"] = None
    report["maxcut_check"] = None
    if opts["spectra"]:
        t0 = clock()
        tol = opts["eig_tol"]
        lam = adjacency_spectrum(g, tol).smallest
        bound = lambda_min_bound(g.n)
        report["lambda_min"] = lam
        report["lambda_min_bound"] = bound
        report["lambda_min_check"] = _float_state(lam, bound, 1e-6)
        mu = laplacian_spectrum(g, tol).largest
        report["maxcut_check"] = _float_state(1.5 * g.n - tr.value, g.n * mu / 4.0, 1e-6)
        timings["spectra"] = clock() - t0

    report["certificate_value"] = None
    report["certificate_check"] = None
    cert = opts["certificate"]
    if cert is not None and cert["graph_sha256"] == report["sha256"]:
        t0 = clock()
        rt = refine(dual(f))
        value = verify_packing(rt, cert["moats"])
        report["certificate_value"] = _frac(value)
        tau = Fraction(tr.value)
        report["certificate_check"] = (
            "equality" if value == tau else "holds" if value < tau else "violated"
        )
        timings["certificate"] = clock() - t0

    report["timings"] = timings if opts["timings"] else None
    return {k: report[k] for k in _REPORT_KEYS}


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        graphs = _read_graphs(args.input, args.format)
    except (OSError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    cert = None
    if args.certificate:
        try:
            with open(args.certificate, "r", encoding="ascii") as fh:
                raw = certificate_from_json(fh.read())
            cert = {
                "graph_sha256": raw.graph_sha256,
                "moats": _cert_moats(raw),
            }
        except (OSError, MoatError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE

    opts = {
        "spectra": args.spectra,
        "eig_tol": args.eig_tol,
        "certificate": cert,
        "timings": args.timings,
    }
    payloads = [(i, g.rotation, opts) for i, g in enumerate(graphs)]
    try:
        if args.jobs > 1 and len(payloads) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_analyze_one, payloads))
        else:
            reports = [_analyze_one(p) for p in payloads]
    except FullereneValidationError as exc:
        print(f"error: input graph is not a fullerene: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    out = sys.stdout if args.output is None else open(args.output, "w")
    try:
        for rep in reports:
            out.write(json.dumps(rep) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()

    violated = any(
        rep[key] == "violated"
        for rep in reports
        for key in rep
        if isinstance(rep[key], str) and key.endswith("_check")
    )
    return EXIT_VIOLATED if violated else EXIT_OK


def cmd_goldberg(args: argparse.Namespace) -> int:
    f = icosahedral_fullerene(args.k)
    data = write_planar_code([f.base])
    if args.output is None:
        sys.stdout.buffer.write(data)
    else:
        with open(args.output, "wb") as fh:
            fh.write(data)
    return EXIT_OK


def cmd_certificate(args: argparse.Namespace) -> int:
    try:
        graphs = _read_graphs(args.input, args.format)
    except (OSError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if not graphs:
        print("error: no graphs in input", file=sys.stderr)
        return EXIT_PARSE
    try:
        f = validate_fullerene(graphs[0])
    except FullereneValidationError as exc:
        print(f"error: input graph is not a fullerene: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sha = graph_sha256(f.base)
    rt = refine(dual(f))
    tau = min_tjoin(rt.origin.base, rt.origin.terminals).value

    if args.emit_greedy is not None:
        packing = greedy_packing(rt)
        cert = packing_certificate(sha, packing)
        with open(args.emit_greedy, "w", encoding="ascii") as fh:
            fh.write(certificate_to_json(cert))
        print(f"value: {_frac(packing.value)}")
        print(f"tau: {tau}")
        return EXIT_OK

    if args.certificate is None:
        print("error: --certificate or --emit-greedy required", file=sys.stderr)
        return EXIT_PARSE
    try:
        with open(args.certificate, "r", encoding="ascii") as fh:
            cert = certificate_from_json(fh.read())
    except (OSError, MoatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if cert.graph_sha256 != sha:
        print(f"certificate is for a different graph (sha256 {cert.graph_sha256})")
        return EXIT_VIOLATED
    try:
        value = verify_packing(rt, _cert_moats(cert))
    except MoatError as exc:
        print(f"invalid packing: {exc}")
        return EXIT_VIOLATED
    print(f"value: {_frac(value)}")
    print(f"tau: {tau}")
    ok = value <= tau
    print(f"value <= tau: {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_spectra(args: argparse.Namespace) -> int:
    try:
        graphs = _read_graphs(args.input, args.format)
    except (OSError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    for i, g in enumerate(graphs):
        sa = adjacency_spectrum(g, args.eig_tol)
        sl = laplacian_spectrum(g, args.eig_tol)
        rep = {
            "index": i,
            "n": g.n,
            "lambda_min": sa.smallest,
            "lambda_max": sa.largest,
            "mu_max": sl.largest,
            "lambda_min_bound": lambda_min_bound(g.n),
            "lambda_min_check": _float_state(sa.smallest, lambda_min_bound(g.n), 1e-6),
            "eigenvalues": list(sa.eigenvalues),
        }
        print(json.dumps(rep))
    return EXIT_OK


def _default_jobs() -> int:
    env = os.environ.get("FULLEROCT_JOBS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fulleroct",
        description="Exact odd cycle transversals and certificates for fullerene graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser):
        p.add_argument("--input", required=True, help="input graph file")
        p.add_argument(
            "--format",
            choices=("planar_code", "adjlist"),
            default="planar_code",
            help="input encoding (default planar_code)",
        )

    p = sub.add_parser("analyze", help="run the full per-graph analysis")
    add_io(p)
    p.add_argument("--output", help="write JSON lines here instead of stdout")
    p.add_argument("--spectra", action="store_true", help="add spectral rows")
    p.add_argument("--certificate", help="moat-packing certificate to verify")
    p.add_argument("--eig-tol", type=float, default=1e-8, help="eigenvalue sign tolerance")
    p.add_argument("--timings", action="store_true", help="include stage timings")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="worker processes (default $FULLEROCT_JOBS or 1)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("goldberg", help="emit the icosahedral fullerene on 60k^2 vertices")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output", help="write planar_code here instead of stdout")
    p.set_defaults(func=cmd_goldberg)

    p = sub.add_parser("certificate", help="verify or emit a moat-packing certificate")
    add_io(p)
    p.add_argument("--certificate", help="certificate JSON to verify")
    p.add_argument("--emit-greedy", help="write the greedy disk packing certificate here")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("spectra", help="print adjacency/Laplacian spectra")
    add_io(p)
    p.add_argument("--eig-tol", type=float, default=1e-8, help="eigenvalue sign tolerance")
    p.set_defaults(func=cmd_spectra)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

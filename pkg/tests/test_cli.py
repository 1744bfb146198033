import json
import subprocess
import sys

import pytest

from fulleroct.cli import _default_jobs, main
from fulleroct.graph import parse_planar_code, validate_fullerene, write_planar_code

REPORT_KEYS = {
    "index", "sha256", "n", "m",
    "tau_odd", "tau_sqrt_bound", "tau_sqrt_check",
    "tau_cubic_planar_bound", "tau_cubic_planar_check",
    "tau_cubic_bound", "tau_cubic_check",
    "is_matching", "independent_set_size", "alpha_bound", "alpha_check",
    "alpha_three_eighths", "diameter", "diameter_bound", "diameter_check",
    "graffiti_check", "lambda_min", "lambda_min_bound", "lambda_min_check",
    "maxcut_check", "certificate_value", "certificate_check", "timings",
}


@pytest.fixture(scope="module")
def plc_path(data_dir):
    return str(data_dir / "fullerenes_small.plc")


@pytest.fixture(scope="module")
def cert_path(data_dir):
    return str(data_dir / "c20_unit_disks.cert.json")


def _analyze_lines(capsys, *args):
    code = main(["analyze", *args])
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


def test_analyze_fixture_file(capsys, plc_path):
    code, reports = _analyze_lines(capsys, "--input", plc_path)
    assert code == 0
    assert len(reports) == 6
    for rep in reports:
        assert set(rep) == REPORT_KEYS
        assert rep["lambda_min"] is None
        assert rep["timings"] is None
        for key, value in rep.items():
            if key.endswith("_check") and value is not None:
                assert value in ("holds", "equality")
    assert reports[5]["n"] == 60
    assert reports[5]["tau_sqrt_check"] == "equality"


def test_analyze_with_spectra_and_certificate(capsys, plc_path, cert_path):
    code, reports = _analyze_lines(
        capsys, "--input", plc_path, "--spectra", "--certificate", cert_path
    )
    assert code == 0
    assert reports[0]["certificate_value"] == "6/1"
    assert reports[0]["certificate_check"] == "equality"
    assert all(r["certificate_value"] is None for r in reports[1:])
    for rep in reports:
        assert rep["lambda_min"] is not None
        assert rep["lambda_min_check"] == "holds"
        assert rep["maxcut_check"] == "holds"


def test_analyze_deterministic_output(capsys, plc_path):
    _, first = _analyze_lines(capsys, "--input", plc_path)
    _, second = _analyze_lines(capsys, "--input", plc_path)
    assert first == second


def test_analyze_jobs_preserves_order(capsys, plc_path):
    code, sequential = _analyze_lines(capsys, "--input", plc_path)
    code2, parallel = _analyze_lines(capsys, "--input", plc_path, "--jobs", "2")
    assert code == code2 == 0
    assert sequential == parallel


def test_analyze_timings_flag(capsys, plc_path):
    _, reports = _analyze_lines(capsys, "--input", plc_path, "--timings")
    assert all(isinstance(rep["timings"], dict) for rep in reports)
    assert all("tjoin" in rep["timings"] for rep in reports)


def test_analyze_adjlist_format(capsys, data_dir):
    path = str(data_dir / "fullerenes_small.adjlist")
    code, reports = _analyze_lines(capsys, "--input", path, "--format", "adjlist")
    assert code == 0 and len(reports) == 6


def test_analyze_output_file(tmp_path, plc_path, capsys):
    out = tmp_path / "report.jsonl"
    code = main(["analyze", "--input", plc_path, "--output", str(out)])
    assert code == 0
    assert capsys.readouterr().out == ""
    lines = out.read_text().splitlines()
    assert len(lines) == 6


def test_analyze_corrupt_file(tmp_path, capsys):
    bad = tmp_path / "bad.plc"
    bad.write_bytes(b"\x05\x01\x02")
    assert main(["analyze", "--input", str(bad)]) == 2
    assert "error" in capsys.readouterr().err


def test_analyze_missing_file(capsys):
    assert main(["analyze", "--input", "/nonexistent.plc"]) == 2
    capsys.readouterr()


def test_analyze_non_fullerene(tmp_path, capsys, k4):
    path = tmp_path / "k4.plc"
    path.write_bytes(write_planar_code([k4]))
    assert main(["analyze", "--input", str(path)]) == 2
    assert "not a fullerene" in capsys.readouterr().err


def test_goldberg_command(tmp_path, capsys):
    out = tmp_path / "gp.plc"
    assert main(["goldberg", "--k", "1", "--output", str(out)]) == 0
    (g,) = parse_planar_code(out.read_bytes())
    f = validate_fullerene(g)
    assert f.n == 60


def test_certificate_verify(capsys, plc_path, cert_path):
    code = main([
        "certificate", "--input", plc_path, "--certificate", cert_path,
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "value: 6/1" in out
    assert "tau: 6" in out
    assert "value <= tau: yes" in out


def test_certificate_rejects_overlap(tmp_path, capsys, plc_path, cert_path):
    payload = json.loads(open(cert_path).read())
    payload["moats"][0]["width"] = 2  # collides with the neighbouring disks
    bad = tmp_path / "bad.cert.json"
    bad.write_text(json.dumps(payload))
    code = main(["certificate", "--input", plc_path, "--certificate", str(bad)])
    out = capsys.readouterr().out
    assert code == 1
    assert "overlap" in out


def test_certificate_wrong_graph(tmp_path, capsys, plc_path, cert_path):
    payload = json.loads(open(cert_path).read())
    payload["graph_sha256"] = "0" * 64
    bad = tmp_path / "wrong.cert.json"
    bad.write_text(json.dumps(payload))
    code = main(["certificate", "--input", plc_path, "--certificate", str(bad)])
    assert code == 1
    assert "different graph" in capsys.readouterr().out


def test_certificate_emit_greedy_round_trip(tmp_path, capsys, plc_path):
    emitted = tmp_path / "greedy.cert.json"
    code = main(["certificate", "--input", plc_path, "--emit-greedy", str(emitted)])
    assert code == 0
    assert "value: 6/1" in capsys.readouterr().out
    code = main(["certificate", "--input", plc_path, "--certificate", str(emitted)])
    assert code == 0
    assert "value <= tau: yes" in capsys.readouterr().out


def test_certificate_unrefined_widths_double(tmp_path, capsys):
    # An unrefined certificate speaks dual-triangulation ids and widths;
    # verification doubles the widths into the refinement, so twelve
    # radius-1 dual disks certify the tight bound 12 for the 60-vertex
    # icosahedral graph.
    from fulleroct.goldberg import icosahedral_fullerene
    from fulleroct.graph import dual, graph_sha256

    f = icosahedral_fullerene(1)
    plc = tmp_path / "gp11.plc"
    plc.write_bytes(write_planar_code([f.base]))
    cert = {
        "graph_sha256": graph_sha256(f.base),
        "refined": False,
        "moats": [{"core": [u], "width": 1} for u in sorted(dual(f).terminals)],
    }
    cert_file = tmp_path / "unrefined.cert.json"
    cert_file.write_text(json.dumps(cert))
    code = main(["certificate", "--input", str(plc), "--certificate", str(cert_file)])
    out = capsys.readouterr().out
    assert code == 0
    assert "value: 12/1" in out and "value <= tau: yes" in out


def test_spectra_command(capsys, plc_path):
    assert main(["spectra", "--input", plc_path]) == 0
    lines = [json.loads(l) for l in capsys.readouterr().out.splitlines()]
    assert len(lines) == 6
    for rep in lines:
        assert len(rep["eigenvalues"]) == rep["n"]
        assert rep["lambda_min_check"] == "holds"


def test_default_jobs_env(monkeypatch):
    monkeypatch.setenv("FULLEROCT_JOBS", "3")
    assert _default_jobs() == 3
    monkeypatch.setenv("FULLEROCT_JOBS", "junk")
    assert _default_jobs() == 1
    monkeypatch.delenv("FULLEROCT_JOBS")
    assert _default_jobs() == 1


def test_console_entry_point(plc_path):
    proc = subprocess.run(
        [sys.executable, "-m", "fulleroct.cli", "analyze", "--input", plc_path],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 6


def test_analyze_generated_gp22(tmp_path, capsys):
    plc = tmp_path / "gp22.plc"
    assert main(["goldberg", "--k", "2", "--output", str(plc)]) == 0
    code = main(["analyze", "--input", str(plc)])
    rep = json.loads(capsys.readouterr().out)
    assert code == 0
    assert rep["n"] == 240 and rep["tau_odd"] == 24
    assert rep["tau_sqrt_check"] == "equality"
    assert rep["alpha_check"] == "equality"

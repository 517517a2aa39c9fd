import json
import subprocess
import sys

import pytest

from isospec import cli
from isospec.reporting import ResultCache, jsonable


@pytest.fixture
def run(tmp_path, capsys):
    cache = tmp_path / "cache"

    def _run(*argv, cached=False):
        flags = ["--cache-dir", str(cache)] if cached else ["--no-cache"]
        code = cli.main([*flags, *argv])
        out, err = capsys.readouterr()
        return code, out, err

    _run.cache = cache
    return _run


def payload(out):
    env = json.loads(out)
    assert env["schema"] == 1
    assert set(env) == {"schema", "command", "parameters", "result", "toolkit_version", "deterministic_seed"}
    return env["result"]


def test_spectrum_j1(run):
    code, out, _ = run("--json", "spectrum", "J1")
    assert code == 0
    r = payload(out)
    assert r["mu"] == [6, 7, 10, 11, 15, 19]
    assert r["order"] == 175560
    assert r["primes"] == [2, 3, 5, 7, 11, 19]


def test_spectrum_ree_squared(run):
    code, out, _ = run("--json", "spectrum", "R", "27", "--squared")
    r = payload(out)
    assert r["mu_square"] == [114, 126, 171, 182, 222, 234, 266, 333, 494, 518, 703, 962]
    assert r["components"]["rho"] == {"3": [13], "4": [7], "5": [19], "6": [37]}


def test_spectrum_l2_text(run):
    code, out, _ = run("spectrum", "L2", "7")
    assert code == 0
    assert "168" in out and "{3, 4, 7}" in out


def test_large_numbers_become_strings(run):
    code, out, _ = run("--json", "spectrum", "R", str(3**21), "--squared")
    assert code == 0
    r = payload(out)
    assert r["order"] is None
    assert all(isinstance(x, str) for x in r["mu_square"] if not isinstance(x, int))
    assert any(isinstance(x, str) for x in r["mu_square"])
    assert jsonable(2**53) == str(2**53) and jsonable(2**53 - 1) == 2**53 - 1


def test_overflowing_square_is_a_parameter_error(run):
    code, _, err = run("audit", "R", str(3**21))
    assert code == 2 and "63-bit" in err


@pytest.mark.parametrize(
    "argv,t",
    [(["graph", "J1"], 4), (["graph", "R", "243"], 5), (["graph", "L2", "5", "--squared"], 1)],
)
def test_graph_independence(run, argv, t):
    code, out, _ = run("--json", *argv)
    assert code == 0
    assert payload(out)["independence_number"] == t


def test_graph_dot_file(run, tmp_path):
    target = tmp_path / "j1.dot"
    code, out, _ = run("graph", "J1", "--dot", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith("graph") and "2 -- 5;" in text
    # global position also accepted
    code, _, _ = run("--dot", str(tmp_path / "b.dot"), "graph", "L2", "7")
    assert code == 0 and (tmp_path / "b.dot").exists()


def test_graph_dot_write_failure(run, tmp_path):
    code, _, err = run("graph", "J1", "--dot", str(tmp_path / "no" / "such" / "dir.dot"))
    assert code == 3 and "cannot write" in err


def test_audit_exit_codes(run):
    code, out, _ = run("--json", "audit", "J1")
    assert code == 0
    assert payload(out)["witness"]["kind"] == "quadruple"
    code, out, _ = run("--json", "audit", "R", "27")
    assert code == 0
    code, out, _ = run("audit", "L2", "11")
    assert code == 1
    assert "no witness found" in out and "solvable" not in out.replace("nonsolvable", "")


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "L2", "6"],
        ["spectrum", "R", "81"],
        ["spectrum", "L2"],
        ["spectrum", "J1", "11"],
        ["spectrum", "Sz", "8"],
        ["verify", "psl2"],
        ["verify", "psl2", "128"],
        ["verify", "witness", "17"],
        ["verify", "nonsense"],
        ["verify", "j1", "11"],
        ["audit", "L2", "7", "--dot", "x.dot"],
        ["frobnicate"],
    ],
)
def test_invalid_parameters_exit_2(run, argv):
    code, _, err = run(*argv)
    assert code == 2
    assert err


def test_verify_targets(run):
    code, out, _ = run("--json", "verify", "psl2", "13")
    assert code == 0
    checks = payload(out)["checks"]
    assert [c["observed"] for c in checks] == [1092, [6, 7, 13]]
    code, out, _ = run("verify", "witness", "5")
    assert code == 0 and "PASS" in out and "FAIL" not in out
    code, out, _ = run("--json", "verify", "j1")
    assert code == 0
    assert [c["observed"] for c in payload(out)["checks"]] == [175560, [6, 7, 10, 11, 15, 19]]


def test_verify_j1_bad_data(run, tmp_path):
    code, _, err = run("--j1-data", str(tmp_path / "missing.txt"), "verify", "j1")
    assert code == 5
    bad = tmp_path / "bad.txt"
    bad.write_text("GF 11\nDIM 7\n1 2\n")
    code, _, err = run("verify", "j1", "--j1-data", str(bad))
    assert code == 5 and "bad.txt:3" in err


def test_verify_failure_exit_4(run, monkeypatch):
    monkeypatch.setattr(cli, "_verify_psl2", lambda q: [cli._check("rigged", 1, 2)])
    code, out, _ = run("verify", "psl2", "7")
    assert code == 4 and "FAIL" in out


def test_reports_are_reproducible_and_cached(run):
    first = run("--json", "audit", "R", "243", cached=True)
    files = list(run.cache.glob("*.json"))
    assert len(files) == 1
    second = run("--json", "audit", "R", "243", cached=True)
    fresh = run("--json", "audit", "R", "243")
    assert first == second == fresh
    assert files[0].read_text() == first[1]


def test_cache_hit_skips_computation(run, monkeypatch):
    run("spectrum", "J1", cached=True)
    monkeypatch.setattr(cli, "mu_of", lambda spec: (_ for _ in ()).throw(AssertionError("recomputed")))
    code, out, _ = run("spectrum", "J1", cached=True)
    assert code == 0 and "{6, 7, 10, 11, 15, 19}" in out


def test_cache_env_override(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ISOSPEC_CACHE_DIR", str(tmp_path / "envcache"))
    assert cli.main(["spectrum", "L2", "8"]) == 0
    assert list((tmp_path / "envcache").glob("*.json"))


def test_cache_keys_differ_by_parameters():
    assert ResultCache.key("spectrum", {"q": 7}) != ResultCache.key("spectrum", {"q": 8})
    assert ResultCache.key("spectrum", {"q": 7}) == ResultCache.key("spectrum", {"q": 7})


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "isospec", "--no-cache", "graph", "L2", "7"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "t         3" in proc.stdout

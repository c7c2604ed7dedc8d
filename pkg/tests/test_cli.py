"""Matrix file format, CLI subcommands, cache, and determinism."""

import json

import pytest

from conftest import GLM_CS, GLM_LAMBDAS, T57_ROWS
from toricrobust import (
    EntryCountMismatchError,
    MalformedHeaderError,
    NonIntegerTokenError,
    parse_matrix,
    write_matrix,
)
from toricrobust.cli import CACHE_ENV, execute, main


@pytest.fixture()
def t57_file(tmp_path, t57):
    path = tmp_path / "T57.mat"
    path.write_text(write_matrix(t57))
    return str(path)


@pytest.fixture()
def a465_file(tmp_path, curve465):
    path = tmp_path / "A465.mat"
    path.write_text(write_matrix(curve465))
    return str(path)


def test_parse_examples():
    A = parse_matrix("2 3\n1 2 3\n4 5 6")
    assert A.rows == ((1, 2, 3), (4, 5, 6))
    assert parse_matrix("1 2\n-1 2").rows == ((-1, 2),)


def test_parse_errors():
    with pytest.raises(EntryCountMismatchError):
        parse_matrix("2 2\n1 2 3")
    with pytest.raises(MalformedHeaderError):
        parse_matrix("2\n1 2")
    with pytest.raises(MalformedHeaderError):
        parse_matrix("a b\n1 2")
    with pytest.raises(NonIntegerTokenError):
        parse_matrix("1 2\n1 x")


def test_write_parse_roundtrip(t57, glm_matrix, curve465):
    for A in (t57, glm_matrix, curve465):
        assert parse_matrix(write_matrix(A)) == A


def test_whitespace_normalized_on_roundtrip():
    text = "2 2\n 1\t2\n\n3   4\n"
    assert write_matrix(parse_matrix(text)) == "2 2\n1 2\n3 4\n"


def test_graver_command(a465_file, tmp_path):
    out = tmp_path / "gr.mat"
    report = execute(["graver", a465_file, "-o", str(out), "--json", "--oracle"])
    assert report.exit_code == 0
    assert report.result["count"] == 7
    assert report.result["oracle_checked"]
    written = parse_matrix(out.read_text())
    assert written.nrows == 7 and written.ncols == 3
    assert out.read_text() == report.artifact


def test_bouquets_command(tmp_path, glm_matrix):
    path = tmp_path / "glm.mat"
    path.write_text(write_matrix(glm_matrix))
    report = execute(["bouquets", str(path)])
    classes = [b["class"] for b in report.result["bouquets"]]
    assert classes == [
        "non-mixed", "mixed", "non-mixed", "non-mixed", "non-mixed", "mixed", "non-mixed",
    ]
    assert report.result["bouquets"][0]["c"] == [7, 1, 2027]
    assert not report.result["simple"]


def test_robust_command(tmp_path, glm_matrix):
    path = tmp_path / "glm.mat"
    path.write_text(write_matrix(glm_matrix))
    report = execute(["robust", str(path)])
    assert report.result["strongly_robust"] is True
    assert report.result["graver_count"] == report.result["indispensable_count"]


def test_complex_command(a465_file):
    report = execute(["complex", a465_file, "--json"])
    assert report.result["maximal_faces"] == [[3]]
    assert report.result["faces"] == [[], [3]]
    assert report.result["dimension"] == 0


def test_check_dimension_exit_code(a465_file):
    report = execute(["check-dimension", a465_file])
    assert report.exit_code == 0
    assert report.result["bound_holds"] is True
    assert report.result == {"dimension": 0, "rank": 1, "bound_holds": True}


def test_lift_command(tmp_path, a465_file):
    report = execute(["lift", a465_file, "--omega", "3"])
    assert report.result["rows"] == 3 and report.result["cols"] == 5
    assert report.result["matrix"][0] == [4, 6, 5, 0, 0]
    full = execute(["lift", a465_file])
    assert full.result["rows"] == 4 and full.result["cols"] == 6


def test_glm_command(tmp_path, glm_matrix):
    spec = {
        "base": [list(r) for r in T57_ROWS],
        "c": [list(c) for c in GLM_CS],
        "lambda": [list(l) for l in GLM_LAMBDAS],
    }
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(spec))
    out = tmp_path / "glm.mat"
    report = execute(["glm", str(path), "-o", str(out)])
    assert parse_matrix(out.read_text()) == glm_matrix
    assert report.result["lambda"] == [list(l) for l in GLM_LAMBDAS]


def test_cyclic_command(tmp_path, t57):
    out = tmp_path / "T57.mat"
    report = execute(["cyclic", "5", "1", "2", "3", "4", "5", "6", "7", "-o", str(out)])
    assert parse_matrix(out.read_text()) == t57
    assert report.result["rows"] == 5 and report.result["cols"] == 7


def test_cache_hit_is_byte_identical(a465_file, tmp_path):
    cache = tmp_path / "cache"
    cold = execute(["graver", a465_file, "--cache-dir", str(cache)])
    cached_files = list(cache.glob("*.gra"))
    assert len(cached_files) == 1
    warm = execute(["graver", a465_file, "--cache-dir", str(cache)])
    assert warm.canonical_bytes() == cold.canonical_bytes()
    assert warm.artifact == cold.artifact


def test_cache_file_is_actually_read(a465_file, tmp_path):
    cache = tmp_path / "cache"
    execute(["graver", a465_file, "--cache-dir", str(cache)])
    path = next(cache.glob("*.gra"))
    path.write_text("1 3\n1 1 -2\n")
    tampered = execute(["graver", a465_file, "--cache-dir", str(cache)])
    assert tampered.result["elements"] == [[1, 1, -2]]


def test_cache_env_var(a465_file, tmp_path, monkeypatch):
    cache = tmp_path / "envcache"
    monkeypatch.setenv(CACHE_ENV, str(cache))
    execute(["graver", a465_file])
    assert list(cache.glob("*.gra"))


def test_cache_flag_beats_env_var(a465_file, tmp_path, monkeypatch):
    env_cache = tmp_path / "envcache"
    flag_cache = tmp_path / "flagcache"
    monkeypatch.setenv(CACHE_ENV, str(env_cache))
    execute(["graver", a465_file, "--cache-dir", str(flag_cache)])
    assert list(flag_cache.glob("*.gra"))
    assert not env_cache.exists()


def test_cache_roundtrips_empty_basis(tmp_path):
    path = tmp_path / "zk.mat"
    path.write_text("2 2\n2 3\n5 7\n")
    cache = tmp_path / "cache"
    cold = execute(["graver", str(path), "--cache-dir", str(cache)])
    warm = execute(["graver", str(path), "--cache-dir", str(cache)])
    assert cold.result["count"] == 0
    assert warm.result["count"] == 0
    assert warm.canonical_bytes() == cold.canonical_bytes()


def test_complex_reads_cached_graver(a465_file, tmp_path):
    cache = tmp_path / "cache"
    cold = execute(["complex", a465_file, "--cache-dir", str(cache)])
    assert cold.result["maximal_faces"] == [[3]]
    path = next(cache.glob("*.gra"))
    path.write_text("1 3\n1 1 -2\n")  # a single-element basis makes every subset a face
    tampered = execute(["complex", a465_file, "--cache-dir", str(cache)])
    assert tampered.result["maximal_faces"] == [[1, 2, 3]]


def test_threads_do_not_change_reports(tmp_path, block_2x6, a465_file):
    path = tmp_path / "block.mat"
    path.write_text(write_matrix(block_2x6))
    for argv in (["complex", str(path)], ["complex", a465_file], ["check-dimension", str(path)]):
        one = execute(argv + ["--threads", "1"])
        many = execute(argv + ["--threads", "8"])
        assert one.canonical_bytes() == many.canonical_bytes()


def test_main_error_reporting(tmp_path, capsys):
    bad = tmp_path / "bad.mat"
    bad.write_text("1 2\n1 -1\n")
    code = main(["graver", str(bad)])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "NotPointed"

    code = main(["graver", str(tmp_path / "missing.mat")])
    assert code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "IO"


def test_main_rejects_out_of_range_omega(a465_file, capsys):
    code = main(["lift", a465_file, "--omega", "9"])
    assert code == 2
    assert json.loads(capsys.readouterr().err)["error"] == "BadInput"


def test_main_json_output(a465_file, capsys):
    code = main(["robust", a465_file, "--json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"].startswith("toricrobust-report/")
    assert payload["result"]["strongly_robust"] is False


def test_report_hash_matches_input(a465_file):
    import hashlib

    report = execute(["graver", a465_file])
    with open(a465_file) as fh:
        digest = hashlib.sha256(fh.read().encode()).hexdigest()
    assert report.input_hash == f"sha256:{digest}"

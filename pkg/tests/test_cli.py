import json
import subprocess
import sys

import pytest

from toricext import __version__
from toricext.cli import main

S145 = "dim: 1\ngenerators: 1 4 5\n"
CUBIC = "dim: 2\ngenerators: [3,0] [2,1] [1,2] [0,3]\n"
CI = "dim: 2\ngenerators: [6,0] [0,2] [7,0] [6,4] [15,0]\n"


@pytest.fixture
def doc(tmp_path):
    def write(text, name="in.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ideal_text_and_json(doc, capsys):
    code, out, _ = run(capsys, "ideal", doc(CUBIC))
    assert code == 0 and "mu = 3" in out
    code, out, _ = run(capsys, "ideal", doc(CUBIC), "--json")
    data = json.loads(out)
    assert data["mu"] == 3 and sorted(data["generators"]) == ["x2*x3 - x1*x4", "x2^2 - x1*x3", "x3^2 - x2*x4"]


def test_projective_ideal_matches_printed_basis(doc, capsys):
    code, out, _ = run(capsys, "ideal", "--projective", doc(S145), "--json")
    data = json.loads(out)
    assert data["order"] == "degrevlex x1>x2>x3>x0"
    assert sorted(data["groebner_basis"]) == sorted([
        "x1^4 - x0^3*x2", "x2^4 - x1*x3^3", "x1^2*x3^2 - x0*x2^3", "x1^3*x3 - x0^2*x2^2", "x1*x2 - x0*x3"])


def test_zero_ideal_message(doc, capsys):
    code, out, _ = run(capsys, "ideal", doc("dim: 1\ngenerators: 7\n"))
    assert code == 0 and "zero ideal" in out


def test_delta_and_hilbert(doc, capsys):
    code, out, _ = run(capsys, "delta", doc(S145), "--m", "10", "--json")
    assert json.loads(out)["Delta_witness"] == [10, 0, 0]
    code, out, _ = run(capsys, "hilbert", doc(CI), "--up-to", "6", "--json")
    data = json.loads(out)
    assert data["hf"] == [1, 4, 8, 13, 18, 24, 30]
    assert data["hilbert_polynomial"] == "6k - 6" and data["nondecreasing"]


def test_tangent_cone_and_stdbasis(doc, capsys):
    code, out, _ = run(capsys, "tangent-cone", doc(CI), "--json")
    data = json.loads(out)
    assert data["monomial_ideal"]
    assert sorted(data["generators"]) == sorted(["x4", "x1*x5", "x5^2", "x3^3*x5", "x3^6"])
    code, out, _ = run(capsys, "stdbasis", doc(CI))
    assert code == 0 and "negdegrevlex" in out
    code, _, err = run(capsys, "stdbasis", doc(CI), "--order", "degrevlex")
    assert code == 2 and "local" in err


def test_gb_on_ideal_document(doc, capsys):
    text = "type: ideal\nnames: x y z\ngenerator: x^2 - y*z\ngenerator: x*y - z^2\n"
    code, out, _ = run(capsys, "gb", doc(text), "--order", "lex x>y>z", "--json")
    data = json.loads(out)
    assert code == 0 and data["order"] == "lex x>y>z"
    # same basis as sympy's groebner(..., order="lex")
    assert sorted(data["groebner_basis"]) == sorted(["x^2 - y*z", "x*y - z^2", "x*z^2 - y^2*z", "y^3*z - z^4"])


def test_extend_verify_all(doc, capsys):
    code, out, _ = run(capsys, "extend", doc(S145), "--l", "2", "--m", "9", "--verify", "all")
    assert code == 0
    assert "[pass] prop-affine" in out and "[pass] prop-bad" in out and "[pass] thm-hf" in out


def test_extend_negative_case_is_not_a_failure(doc, capsys):
    code, out, _ = run(capsys, "extend", doc(S145), "--l", "1", "--m", "10", "--verify", "bad", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["steps"][0]["status"] == ["hypothesis-unmet"]
    assert data["steps"][0]["reports"][0]["artifacts"]["mu_closure_ext"] == 5


def test_extend_hom_with_betti(doc, capsys):
    code, out, _ = run(capsys, "extend", doc(CUBIC), "--l", "1", "--m", "0,6", "--verify", "hom",
                       "--betti", "3,2", "--json")
    assert code == 0
    report = json.loads(out)["steps"][0]["reports"][0]
    assert report["passed"] and report["artifacts"]["betti_ext"] == [4, 5, 2]
    code, _, err = run(capsys, "extend", doc(CUBIC), "--l", "1", "--m", "0,6", "--verify", "hom")
    assert code == 2 and "--betti" in err


def test_extend_chain_codimension(doc, capsys):
    code, out, _ = run(capsys, "extend", doc(CI), "--l", "1", "--m", "6,4", "--chain", "3", "--json")
    steps = json.loads(out)["steps"]
    assert code == 0
    assert [s["extension"]["embedding_codimension"] for s in steps] == [4, 5, 6]
    assert all(s["status"] == ["pass"] for s in steps)


@pytest.mark.parametrize("text,argv,guard", [
    (S145, ["--l", "2", "--m", "10"], "coprimality"),
    ("dim: 1\ngenerators: 3 5\n", ["--l", "1", "--m", "2"], "membership"),
    (S145, ["--l", "0", "--m", "5"], "positive-l"),
    (CUBIC, ["--l", "1", "--m", "6"], "dimension"),
])
def test_invalid_extensions_exit_2(doc, capsys, text, argv, guard):
    code, _, err = run(capsys, "extend", doc(text), *argv)
    assert code == 2 and f"guard '{guard}'" in err


def test_bad_documents_exit_2(doc, capsys):
    code, _, err = run(capsys, "ideal", doc("dim: 2\ngenerators: [1]\n"))
    assert code == 2 and "line 2" in err
    code, _, err = run(capsys, "ideal", "/nonexistent/file")
    assert code == 2
    code, _, err = run(capsys, "ideal", doc("type: ideal\nnames: x\ngenerator: x\n"))
    assert code == 2 and "semigroup" in err


def test_json_output_is_deterministic(doc, capsys):
    path = doc(CI)
    outs = {run(capsys, "extend", path, "--l", "3", "--m", "6,4", "--verify", "cone", "--json")[1]
            for _ in range(3)}
    assert len(outs) == 1
    assert json.loads(outs.pop())["steps"][0]["reports"][0]["version"] == __version__


def test_cache_hits_are_identical(doc, capsys, tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    path = doc(CI)
    first = run(capsys, "hilbert", path, "--json", "--cache-dir", str(cache))[1]
    files = list(cache.iterdir())
    assert len(files) == 1
    second = run(capsys, "hilbert", path, "--json", "--cache-dir", str(cache))[1]
    assert first == second
    # different options must not collide
    run(capsys, "hilbert", path, "--json", "--cache-dir", str(cache), "--up-to", "4")
    assert len(list(cache.iterdir())) == 2
    # the environment variable is honoured
    monkeypatch.setenv("TORICEXT_CACHE_DIR", str(tmp_path / "env"))
    assert run(capsys, "hilbert", path, "--json")[1] == first
    assert len(list((tmp_path / "env").iterdir())) == 1
    # a poisoned entry is served, which proves the cache is actually read
    files[0].write_text(json.dumps({"command": "hilbert", "marker": True, "series_text": "",
                                    "reduced_text": "", "dimension": 0, "hf": [],
                                    "hilbert_polynomial": "", "tail_start": 0,
                                    "nondecreasing": True, "violation": None}))
    assert json.loads(run(capsys, "hilbert", path, "--json", "--cache-dir", str(cache))[1])["marker"]


def test_batch_verify_keeps_input_order(doc, capsys):
    jobs = [
        doc(CI + "l: 3\nm: [6,4]\nverify: cone\n", "a.txt"),
        doc("dim: 1\ngenerators: 2 3\nl: 2\nm: 2\n", "b.txt"),
        doc(S145 + "l: 2\nm: 9\nverify: affine\n", "c.txt"),
    ]
    code, out, _ = run(capsys, "verify", *jobs, "--jobs", "2", "--json")
    results = json.loads(out)["results"]
    assert [r["input"] for r in results] == jobs
    assert results[1]["guard"] == "coprimality"
    assert results[0]["exit"] == 0 and results[2]["exit"] == 0
    assert code == 2
    serial = run(capsys, "verify", *jobs, "--json")[1]
    assert serial == out


def test_console_script_entry_point(doc):
    proc = subprocess.run([sys.executable, "-m", "toricext.cli", "delta", doc(S145), "--m", "9"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "delta = 2" in proc.stdout

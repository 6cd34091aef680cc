import json
import subprocess
import sys

import pytest

from ncgrowth.cli import EXIT_FAIL, EXIT_GUARD, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_show(capsys):
    code, out, _ = run(capsys, "show", "xx", "--dot")
    assert code == EXIT_OK and "relations x.x;" in out and "digraph" in out


def test_hilbert_csv(capsys, tmp_path):
    path = tmp_path / "h.csv"
    code, _, _ = run(capsys, "hilbert", "xx", "--n", "6", "--csv", str(path))
    assert code == EXIT_OK
    assert path.read_text().splitlines()[-1] == "6,21"


def test_hilbert_graded(capsys):
    code, out, _ = run(capsys, "hilbert", "projective_line3", "--n", "5")
    assert code == EXIT_OK and out.startswith("1 3 8 21 55 144")


def test_growth_json(capsys):
    code, out, _ = run(capsys, "growth", "free(2)", "--json", "-")
    data = json.loads(out)
    assert code == EXIT_OK and data["classification"] == "exponential"


def test_serre_example(capsys):
    code, out, _ = run(capsys, "serre", "examples/example52.alg", "--n", "200")
    rows = [line for line in out.splitlines() if line and line[0].isdigit()]
    assert code == EXIT_OK and len(rows) == 200
    assert {r.split(",")[1] for r in rows} == {"2"}
    assert "hpol exact-0" in out


def test_serre_dmax(capsys):
    code, out, _ = run(capsys, "serre", "free(2)", "--n", "5", "--dmax", "0", "--csv", "-")
    assert code == EXIT_OK and out.splitlines()[-1] == "5,32,0"


def test_betti_truncation(capsys):
    code, out, _ = run(capsys, "betti", "yx", "--n", "2", "--json", "-")
    assert code == EXIT_OK
    assert all(r["holds"] for r in json.loads(out)["inequality"])


def test_gb_and_ext(capsys):
    code, out, _ = run(capsys, "gb", "projective_line2", "--n", "5")
    assert code == EXIT_OK and "complete" in out
    code, out, _ = run(capsys, "ext", "yx", "--n", "3", "--t", "0,0.5", "--json", "-")
    assert code == EXIT_OK and json.loads(out)["eps_O"] == {"0": 4}


def test_report_and_random(capsys):
    code, out, _ = run(capsys, "report", "random", "--seed", "4", "--n", "60")
    data = json.loads(out)
    assert code == EXIT_OK and data["growth"]["classification"] == "polynomial"


def test_corpus_check(capsys):
    code, out, _ = run(capsys, "corpus", "--check")
    assert code == EXIT_OK and "MISMATCH" not in out


def test_corpus_mismatch(capsys, tmp_path):
    (tmp_path / "bad.alg").write_text("#@ growth: exponential\nvertices v; arrows x:v->v@1;\n")
    code, out, _ = run(capsys, "corpus", "--check", "--corpus", str(tmp_path))
    assert code == EXIT_FAIL and "MISMATCH" in out


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "--only", "ac01")
    assert code == EXIT_OK and out.startswith("[PASS] ac01")


def test_verify_failure_exit(capsys, monkeypatch):
    from ncgrowth import verify
    monkeypatch.setitem(verify.CRITERIA, "ac01_projective_line_g2",
                        ("forced", lambda rec, **_: rec.check(False, "forced")))
    code, out, _ = run(capsys, "verify", "--only", "ac01")
    assert code == EXIT_FAIL and "[FAIL]" in out


@pytest.mark.parametrize("argv", [
    ("growth", "no_such_thing"),
    ("bogus",),
    ("growth", "xx", "--n", "abc"),
    ("verify",),
    ("ext", "xx", "--t", "a,b"),
    ("growth", "xx", "--guard", "nonsense=1"),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_parse_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text("vertices v;\narrows x:v->w@1;\n")
    code, _, err = run(capsys, "show", str(p))
    assert code == EXIT_USAGE and "line 2" in err


def test_guard_exit(capsys):
    assert run(capsys, "growth", "xx", "--n", "100", "--guard", "n=10")[0] == EXIT_GUARD
    assert run(capsys, "report", "xx", "--guard", "gldim=3")[0] == EXIT_OK
    assert run(capsys, "gb", "projective_line3", "--n", "9", "--guard", "gb=5")[0] == EXIT_GUARD


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ncgrowth", "growth", "yx"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("polynomial; gk_dim 2")


def test_parallel_verify_is_ordered():
    from ncgrowth.verify import verify_all
    recs = verify_all(only=["ac03", "ac01", "ac02"], jobs=2)
    assert [r.claim_id[:4] for r in recs] == ["ac01", "ac02", "ac03"]
    assert all(r.passed for r in recs)

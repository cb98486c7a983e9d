import json

import pytest

from codedist.cli import EXIT_BUDGET, EXIT_OK, EXIT_PARSE, EXIT_SAME, main
from codedist.codefile import format_code, read_code
from codedist.constructions import builtin


@pytest.fixture
def code(tmp_path):
    def make(name):
        path = tmp_path / f"{name}.code"
        path.write_text(format_code(builtin(name)))
        return str(path)
    return make


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def line(out, key):
    return next(l for l in out.splitlines() if l.split("\t")[0] == key)


def test_invariants_alpha(capsys, code):
    rc, out, _ = run(capsys, "invariants", code("ternary-422"), "--alpha")
    assert rc == EXIT_OK and line(out, "alpha") == "alpha\t4,2,2,1"
    rc, out, _ = run(capsys, "invariants", code("even-7"), "--alpha")
    assert line(out, "alpha") == "alpha\t6,4,4,2,2,2,1"


def test_invariants_range_and_json(capsys, code):
    rc, out, _ = run(capsys, "invariants", code("BR17-C1"), "--alpha", "4..5", "--output", "json")
    d = json.loads(out)
    assert rc == EXIT_OK and d["alpha"]["values"] == {"4": 4, "5": 2}
    rc, _, err = run(capsys, "invariants", code("BR17-C1"), "--alpha", "0..3")
    assert rc == EXIT_PARSE and "alpha range" in err


def test_invariants_other_sections(capsys, code):
    rc, out, _ = run(capsys, "invariants", code("even-4"), "--greedy", "--radii", "--mu", "--sld", "--bounds",
                     "--extend", "2", "--asymptotic", "2")
    assert rc == EXIT_OK
    assert "alpha" not in [l.split("\t")[0] for l in out.splitlines()]
    assert line(out, "mu") == "mu\t1\tmaximal=true"
    assert line(out, "asymptotic").endswith("uncertified, swept l <= 2")


def test_budget_exit(capsys, code):
    rc, out, err = run(capsys, "invariants", code("BR17-C1"), "--alpha", "--budget", "20000")
    assert rc == EXIT_BUDGET
    assert "skipped\talpha_5" in out and "skipped alpha_5" in err


def test_budget_from_environment(capsys, code, monkeypatch):
    monkeypatch.setenv("CODEDIST_BUDGET", "20000")
    rc, _, _ = run(capsys, "invariants", code("BR17-C1"), "--alpha")
    assert rc == EXIT_BUDGET


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("metric hamming 3\nfield 2 1\ngenerator\n1 1\n")
    rc, _, err = run(capsys, "invariants", str(bad))
    assert rc == EXIT_PARSE and "line 4" in err
    rc, _, _ = run(capsys, "invariants", str(tmp_path / "missing.code"))
    assert rc == EXIT_PARSE


def test_compare(capsys, code):
    rc, out, _ = run(capsys, "compare", code("rs-9-4"), code("twisted-rs-9"), "--alpha", "1..4")
    assert rc == EXIT_OK and "alpha_3" in out
    rc, out, _ = run(capsys, "compare", code("duality-C1"), code("duality-C1"), "--alpha")
    assert rc == EXIT_SAME
    rc, _, _ = run(capsys, "compare", code("duality-C1"), code("duality-C2"), "--alpha")
    assert rc == EXIT_SAME
    rc, out, _ = run(capsys, "compare", code("duality-C1"), code("duality-C2"), "--asymptotic", "2")
    assert rc == EXIT_OK
    rc, _, _ = run(capsys, "compare", code("duality-C1"), code("F2^3"))
    assert rc == EXIT_PARSE


def test_construct(capsys, tmp_path):
    rc, out, _ = run(capsys, "construct", "rs", "--q", "9", "--k", "4")
    assert rc == EXIT_OK and out.startswith("metric hamming 9")
    path = tmp_path / "g.code"
    rc, _, _ = run(capsys, "construct", "gabidulin", "--q", "2", "--m", "4", "--k", "1", "-o", str(path))
    assert rc == EXIT_OK and read_code(path).k == 4
    for argv in (["simplex", "--q", "2", "--k", "3"], ["even-weight", "--n", "5"], ["twisted-rs"],
                 ["hadamard", "--q", "2", "--m", "2", "--k", "2"], ["builtin", "duality-C1"]):
        assert run(capsys, "construct", *argv)[0] == EXIT_OK
    assert run(capsys, "construct", "nonsense")[0] == EXIT_PARSE
    assert run(capsys, "construct", "rs", "--q", "9")[0] == EXIT_PARSE
    assert run(capsys, "construct", "builtin", "nope")[0] == EXIT_PARSE


def test_partial(capsys, tmp_path, code):
    kern = tmp_path / "kernel.code"
    kern.write_text("metric hamming 3\nfield 2 1\ngenerator\n1 1 0\n0 1 1\n1 1 1\n")
    rc, out, _ = run(capsys, "partial", str(kern))
    assert rc == EXIT_OK
    assert line(out, "delta") == "delta\t2,2,1"
    assert line(out, "exponent") == "exponent\t0.420620"
    rc, out, _ = run(capsys, "partial", code("F2^3"), "--from-code")
    rows = [l.split("\t")[1].split() for l in out.splitlines() if l.startswith("row")]
    assert [sum(x != "0" for x in r) for r in rows] == [3, 1, 1]
    assert line(out, "delta") == "delta\t3,1,1"


def test_usage_errors(capsys):
    assert main([]) == EXIT_PARSE
    assert main(["invariants"]) == EXIT_PARSE
    capsys.readouterr()

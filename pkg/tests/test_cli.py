import io
import json
import subprocess
import sys

import pytest

from graphsquare import families as fam
from graphsquare import g6_decode, g6_encode
from graphsquare.cli import main
from graphsquare.iso import canonical_form


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def c6():
    return g6_encode(fam.cycle(6)).decode()


def test_rho_power():
    code, out = run("rho", c6(), "--power", "2")
    assert code == 0
    assert abs(float(out.split()[0]) - 4) <= 1e-10
    assert "residual=" in out


def test_rho_exact():
    code, out = run("rho", "Bw", "--exact")
    assert code == 0 and "exact=2" in out and "interval=" in out


def test_rho_stdin():
    code, out = run("rho", "-", stdin="Bw\nCF\n")
    assert code == 0 and len(out.splitlines()) == 2


def test_square():
    code, out = run("square", g6_encode(fam.cycle(5)).decode())
    assert code == 0 and g6_decode(out.strip()) == fam.complete(5)


def test_family():
    code, out = run("family", "broom:n=9,d=4,i=3")
    assert code == 0 and g6_decode(out.strip()) == fam.broom(9, 4, 3)


@pytest.mark.parametrize("argv, count", [
    (("enum", "trees", "--n", "7"), 11),
    (("enum", "unicyclic", "--n", "6", "--girth", "6"), 1),
    (("enum", "trees", "--n", "6", "--diameter", "3"), 2),
    (("enum", "connected", "--n", "5"), 21),
])
def test_enum(argv, count):
    code, out = run(*argv)
    assert code == 0 and len(out.splitlines()) == count


def test_forbidden_modes():
    _, strict = run("forbidden", "--class", "tree", "--threshold", "4", "--n-max", "7", "--strict")
    _, proper = run("forbidden", "--class", "tree", "--threshold", "4", "--n-max", "7", "--proper")
    s5 = canonical_form(fam.star(5)).decode()
    assert s5 not in strict.split() and s5 in proper.split()


def test_verify_exit_and_formats():
    code, out = run("verify", "check_tree_extremes", "--n-min", "4", "--n-max", "8")
    assert code == 0 and json.loads(out)["status"] == "HOLDS"
    code, out = run("verify", "check_tree_extremes", "--n-min", "4", "--n-max", "8", "--format", "csv")
    assert code == 0 and out.splitlines()[0].startswith("n,trees")


def test_verify_lemma_seed():
    code, out = run("verify", "check_lemma_properties", "--seed", "2", "--trials", "30")
    assert code == 0 and json.loads(out)["range"] == {"trials": 30, "seed": 2}


def test_scan():
    code, out = run("scan", "conjecture1", "--n-max", "30")
    assert code == 0 and len(json.loads(out)["extremal_table"]) == 26


@pytest.mark.parametrize("argv", [
    ("rho", "~~"),
    ("rho", ""),
    ("verify", "no_such_claim"),
    ("enum", "trees", "--n", "40"),
    ("enum", "trees", "--n", "5", "--girth", "3"),
    ("family", "broom:n=3,d=4,i=2"),
    ("forbidden", "--class", "tree", "--threshold", "abc"),
    ("scan", "conjecture1", "--n-max", "3"),
    ("bogus",),
    ("rho", "Bw", "--power", "0"),
    ("verify", "check_tree_extremes", "--jobs", "0"),
])
def test_usage_errors(argv):
    code, _ = run(*argv)
    assert code == 2


def test_undecided_and_violated_codes(monkeypatch):
    from graphsquare import verify as V

    def fake(status):
        return lambda **kw: V.ClaimReport(claim="x", range={}, status=status)

    monkeypatch.setitem(V.CLAIMS, "fake_violated", fake(V.VIOLATED))
    monkeypatch.setitem(V.CLAIMS, "fake_undecided", fake(V.UNDECIDED))
    assert run("verify", "fake_violated")[0] == 1
    assert run("verify", "fake_undecided")[0] == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphsquare", "family", "path:n=4"],
                          capture_output=True, text=True, check=True)
    assert g6_decode(proc.stdout.strip()) == fam.path(4)

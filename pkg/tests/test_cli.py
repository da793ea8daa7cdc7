import io
import json
import subprocess
import sys

from plactic_forge.cli import main


def run(*args):
    out = io.StringIO()
    code = main(list(args), out=out)
    return code, out.getvalue()


def test_poly_schubert():
    code, out = run("poly", "--family", "schubert", "--perm", "2143")
    assert code == 0 and out.strip() == "x1^2 + x1*x2 + x1*x3"


def test_poly_kn_conventions():
    _, a = run("poly", "--family", "kn", "--perm", "2134", "--at-one")
    _, b = run("poly", "--family", "kn", "--perm", "2134", "--at-one", "--swap-params")
    assert a.strip() == "alpha*beta + alpha + 1"
    assert b.strip() == "alpha*beta + beta + 1"


def test_count_csv():
    code, out = run("count", "--seq", "asm", "--upto", "4")
    assert code == 0
    assert out.split() == ["n,value", "1,1", "2,2", "3,7", "4,42"]


def test_basis_hilbert():
    _, out = run("basis", "--algebra", "PC", "--n", "4")
    assert out.strip() == "1,3,8,12,11,6,1"


def test_kernel_json_file(tmp_path):
    path = tmp_path / "table.json"
    code, _ = run("kernel", "--kind", "C", "--algebra", "PC", "--n", "4", "--emit", str(path))
    assert code == 0
    rows = json.loads(path.read_text())
    assert len(rows) == 42 and {"word", "shape", "coefficient"} <= set(rows[0])


def test_lattice_dot():
    code, out = run("lattice", "--n", "3", "--emit", "dot")
    assert code == 0 and out.startswith("digraph")


def test_verify_single_check():
    code, out = run("verify", "--suite", "lattice", "--check", "sizes", "--emit", "json")
    assert code == 0
    assert json.loads(out)


def test_usage_errors():
    assert run("poly", "--family", "nope", "--perm", "21")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("poly", "--family", "schubert", "--perm", "22")[0] == 2


def test_console_module():
    p = subprocess.run([sys.executable, "-m", "plactic_forge", "count", "--seq", "catalan", "--upto", "3"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.split()[-1] == "3,5"

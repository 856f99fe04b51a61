import io
import subprocess
import sys

import pytest

from contact_surgery.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def catalog_file(tmp_path):
    def make(*argv):
        code, text = run(["catalog", *argv])
        assert code == 0
        path = tmp_path / (argv[0] + ".txt")
        path.write_text(text)
        return str(path)

    return make


def test_catalog_emits_diagram():
    code, text = run(["catalog", "olga_c", "--n", "3"])
    assert code == 0
    assert text == (
        "diagram n=2\n"
        "component 1 tb=-2 rot=1 sign=+1\n"
        "component 2 tb=-1 rot=0 sign=-1\n"
        "link 1 2 -1\n"
        "marked tb=-2 rot=1\n"
        "marked_link 1 -2\n"
        "marked_link 2 -1\n"
    )


def test_catalog_list():
    code, text = run(["catalog", "--list"])
    assert code == 0
    assert "lp1_c --p N --k N --n N" in text.splitlines()


def test_invariants_olga(catalog_file):
    code, text = run(["invariants", catalog_file("olga_c", "--n", "3")])
    assert code == 0
    assert text.splitlines() == ["tb_q = 3/1, rot_q = -2/1 | 2/1, r = 1, |H1| = 1", "a0 = -5, cross-check ok"]


def test_invariants_lp1_a(catalog_file):
    code, text = run(["invariants", catalog_file("lp1_a", "--p", "2")])
    assert text.splitlines()[0] == "tb_q = 1/2, rot_q = 0/1 | 0/1, r = 2, |H1| = 2"


def test_invariants_empty_diagram(tmp_path):
    path = tmp_path / "s3.txt"
    path.write_text("diagram n=0\nmarked tb=-1 rot=0\n")
    code, text = run(["invariants", str(path)])
    assert text.splitlines()[0] == "tb_q = -1/1, rot_q = 0/1 | 0/1, r = 1, |H1| = 1"


def test_d3_and_homology(catalog_file):
    path = catalog_file("rp3_tb5_a", "--n", "3")
    assert run(["d3", path]) == (0, "d3 = 1/4\nc^2 = -4/1, sigma = -3, chi = 4, q = 1\n")
    assert run(["homology", path]) == (0, "H1 = Z/2\n|H1| = 2\nr = 2\n")


def test_homology_infinite(tmp_path):
    path = tmp_path / "s1s2.txt"
    path.write_text("diagram n=1\ncomponent 1 tb=1 rot=0 sign=-1\n")
    assert run(["homology", str(path)]) == (0, "H1 = Z\n|H1| = infinite\n")


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--space", "l52_k1", "--n", "2"], "cfe = [-2, -4, -2]\ncount = 6\n"),
        (["count", "--slope", "-5/2"], "slope = -5/2\ncfe = [-3, -2]\ncount = 4\n"),
        (["count", "--space", "lp1", "--p", "4", "--n", "1"], "cfe = [-5]\ncount = 5\n"),
        (["count", "--space", "rp3", "--n", "0"], "cfe = []\ncount = 1\n"),
    ],
)
def test_count(argv, expected):
    code, text = run(argv)
    assert code == 0
    assert text.endswith(expected)


def test_verify_rp3():
    code, text = run(["verify", "--suite", "rp3", "--nmin", "0", "--nmax", "10"])
    assert code == 0
    assert text.splitlines()[-1] == "PASS rp3: 5 families, 21 invariant rows checked"
    assert "PASS rp3 classification (n=0..10)" in text


def test_verify_s3_and_all():
    code, text = run(["verify", "--suite", "s3", "--nmax", "10"])
    assert code == 0 and "FAIL" not in text
    code, text = run(["verify", "--suite", "all", "--nmax", "4"])
    assert code == 0
    summaries = [line for line in text.splitlines() if ":" in line]
    assert len(summaries) == 8


def test_verify_failure_exit_code(monkeypatch):
    from contact_surgery import catalog

    original = catalog.expected_rows

    def corrupted(scope, n, p=None):
        rows = original(scope, n, p)
        return rows[:-1] if scope == "s3" and n == 4 else rows

    monkeypatch.setattr(catalog, "expected_rows", corrupted)
    code, text = run(["verify", "--suite", "s3", "--nmax", "5"])
    assert code == 1
    assert "FAIL s3 classification" in text
    assert "number of classes expected 2, computed 0" in text


@pytest.mark.parametrize(
    "argv, message",
    [
        (["verify", "--suite", "lp1", "--p", "1"], "error: lens parameter p must be >= 2"),
        (["verify", "--suite", "lp1"], "error: --suite lp1 needs --p"),
        (["frobnicate"], "error: argument verb: invalid choice"),
        (["count", "--slope", "0"], "error: slope 0 cannot be normalised"),
        (["count", "--slope", "x/y"], "error: invalid slope"),
        (["count", "--bogus"], "error: unrecognized arguments: --bogus"),
        (["catalog", "lp1_c", "--p", "3"], "error: lp1_c takes --p --k --n"),
        (["catalog", "lp1_b", "--p", "3", "--k", "9"], "error: lp1_b needs 0 <= k <= p"),
        (["invariants", "/nonexistent/file"], "error: cannot read /nonexistent/file"),
    ],
)
def test_errors(argv, message, capsys):
    code, text = run(argv)
    err = capsys.readouterr().err
    assert code == 2
    assert text == ""
    assert err.startswith(message)
    assert err.count("\n") == 1


def test_parse_error_and_missing_marked(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("diagram n=1\ncomponent 1 tb=-1 rot=0 sign=-1\nlink 1 1 2\n")
    assert run(["invariants", str(bad)])[0] == 2
    assert capsys.readouterr().err == "error: line 3: link requires i < j (at '1')\n"
    plain = tmp_path / "plain.txt"
    plain.write_text("diagram n=1\ncomponent 1 tb=-1 rot=0 sign=-1\n")
    assert run(["invariants", str(plain)])[0] == 2
    assert "no marked knot" in capsys.readouterr().err


def test_singular_matrix(tmp_path, capsys):
    path = tmp_path / "sing.txt"
    path.write_text("diagram n=1\ncomponent 1 tb=1 rot=0 sign=-1\nmarked tb=-1 rot=0\nmarked_link 1 1\n")
    assert run(["invariants", str(path)])[0] == 2
    assert capsys.readouterr().err.startswith("error: linking matrix is singular")


def test_tables():
    code, text = run(["tables", "--space", "rp3", "--nmax", "2"])
    assert text.splitlines() == [
        "family\ttb_q\trot_q\td3",
        "rp3_tb3_a\t1/2\t0/1\t1/4",
        "rp3_tb3_b\t3/2\t0/1\t3/4",
        "rp3_tb3_c\t3/2\t+-1/1\t1/4",
        "rp3_tb5_a(n=2)\t5/2\t+-1/1\t3/4",
        "rp3_tb5_b(n=2)\t5/2\t+-2/1\t1/4",
    ]
    code, text = run(["tables", "--space", "s3", "--counts", "--nmin", "-1", "--nmax", "1"])
    assert text.splitlines() == ["n\ttb_q\ts2\tcfe\tcount", "-1\t-1/1\t-1/1\t[]\t1", "0\t0/1\t0/1\t-\t0", "1\t1/1\t1/1\t[]\t1"]


def test_deterministic_output():
    argv = ["verify", "--suite", "l52", "--nmax", "5"]
    assert run(argv) == run(argv)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "contact_surgery.cli", "count", "--slope", "-5/3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "slope = -5/3\ncfe = [-2, -3]\ncount = 3\n"

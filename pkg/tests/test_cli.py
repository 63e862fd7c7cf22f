import pytest

from bridgekit.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, run

from conftest import FIGURE_EIGHT, K11A1, TREFOIL


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bridges(capsys):
    assert call(capsys, "bridges", TREFOIL) == (EXIT_OK, "3\n", "")


def test_validate_errors(capsys):
    code, _, err = call(capsys, "validate", "4 4 2")
    assert code == EXIT_INPUT and "DuplicateLabel" in err
    code, _, err = call(capsys, "validate", "3 6 2")
    assert code == EXIT_INPUT and "OddValue" in err


def test_usage_error(capsys):
    assert call(capsys, "no-such-command")[0] == EXIT_INPUT
    assert call(capsys)[0] == EXIT_INPUT


def test_help(capsys):
    assert call(capsys, "--help")[0] == EXIT_OK


def test_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(FIGURE_EIGHT + "\n"))
    assert call(capsys, "det")[:2] == (EXIT_OK, "5\n")


def test_file(capsys, tmp_path):
    f = tmp_path / "k.dt"
    f.write_text(TREFOIL)
    assert call(capsys, "alexander", "--file", str(f))[:2] == (EXIT_OK, "1*t^2 - 1*t^1 + 1*t^0\n")
    assert call(capsys, "det", "--file", str(tmp_path / "missing"))[0] == EXIT_INPUT
    assert call(capsys, "det", TREFOIL, "--file", str(f))[0] == EXIT_INPUT


def test_canon_lines(capsys):
    code, out, _ = call(capsys, "canon", "--format", "lines", TREFOIL)
    assert code == EXIT_OK and len(out.split()) == 3


def test_realize_pd(capsys):
    code, out, _ = call(capsys, "realize", FIGURE_EIGHT)
    rows = out.splitlines()
    assert code == EXIT_OK and len(rows) == 4 and all(r.startswith("X ") for r in rows)
    assert call(capsys, "realize", "4 6 8 10 2")[0] == EXIT_INPUT


def test_jones_guard(capsys):
    assert call(capsys, "jones", TREFOIL)[0] == EXIT_OK
    assert call(capsys, "jones", "--guard", "10", K11A1)[0] == EXIT_INPUT


def test_fractions(capsys):
    assert call(capsys, "cf", "-1/2")[:2] == (EXIT_OK, "-2 0\n")
    code, out, _ = call(capsys, "rational", "5/2")
    assert code == EXIT_OK and "crossings: 4" in out and "determinant: 5" in out
    assert call(capsys, "rational", "4/3")[0] == EXIT_INPUT
    assert call(capsys, "rational", "3")[0] == EXIT_INPUT
    assert call(capsys, "cf", "1/0")[0] == EXIT_INPUT


def test_montesinos(capsys):
    code, out, _ = call(capsys, "montesinos", "(0; -1/2, -2/3, -2/3, -2/3)")
    assert code == EXIT_OK and "crossings: 11" in out and "bridge index: 4" in out
    code, out, _ = call(capsys, "montesinos", "(0; 1/3, 2/5)")
    assert code == EXIT_OK and "bridge index: n/a" in out
    assert call(capsys, "montesinos", "nonsense")[0] == EXIT_INPUT


@pytest.fixture
def line_11a1(corpus_by_name):
    return corpus_by_name["11a1"].to_line() + "\n"


def test_verify_small_file(capsys, tmp_path, line_11a1):
    f = tmp_path / "c.txt"
    f.write_text(line_11a1)
    code, out, _ = call(capsys, "verify", str(f), "--level", "full")
    assert code == EXIT_OK and "1/1 passed" in out
    f.write_text(line_11a1.replace(" : 3 |", " : 4 |"))
    assert call(capsys, "verify", str(f))[0] == EXIT_FAIL
    f.write_text("garbage\n")
    assert call(capsys, "verify", str(f))[0] == EXIT_INPUT


def test_verify_env(capsys, tmp_path, monkeypatch, line_11a1):
    f = tmp_path / "c.txt"
    f.write_text(line_11a1)
    monkeypatch.setenv("BRIDGEKIT_CORPUS", str(f))
    code, out, _ = call(capsys, "verify", "--format", "lines")
    assert (code, out) == (EXIT_OK, "11a1 ok\n")


def test_verify_shipped(capsys, monkeypatch):
    monkeypatch.delenv("BRIDGEKIT_CORPUS", raising=False)
    code, out, _ = call(capsys, "verify")
    # the one defective shipped record keeps the exit status at 1
    assert code == EXIT_FAIL
    assert "11a212" in out and "551/552 passed" in out

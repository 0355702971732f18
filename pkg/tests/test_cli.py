import subprocess
import sys

import pytest

from braidforge.cli import main
from braidforge.trajectory import sample_rotating_loop


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_exit_code_contract(tmp_path):
    """Black-box: success, domain error and usage error."""
    cmd = [sys.executable, "-m", "braidforge"]
    ok = subprocess.run(cmd + ["delta", "--n", "3", "--variant", "1"], capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout == "n=3\n1 2 1\n"
    bad = subprocess.run(cmd + ["normalize", write(tmp_path, "b", "n=3\n5\n")],
                         capture_output=True, text=True)
    assert bad.returncode == 1 and "error" in bad.stderr
    usage = subprocess.run(cmd + ["delta", "--n", "3", "--bogus"], capture_output=True, text=True)
    assert usage.returncode == 2 and "--bogus" in usage.stderr
    missing = subprocess.run(cmd + ["delta"], capture_output=True, text=True)
    assert missing.returncode == 2 and "--n" in missing.stderr


def test_delta_and_fulltwist(capsys):
    assert run(capsys, "delta", "--n", "3", "--variant", "4")[1] == "n=3\n2 1 2\n"
    assert run(capsys, "fulltwist", "--n", "3", "--variant", "D")[1] == "n=3\n1 2 1 2 1 2\n"
    assert run(capsys, "expand-alpha", "--i", "1", "--j", "3", "--n", "3")[1] == "n=3\n2 1 1 -2\n"


def test_normalize_equal_perm(tmp_path, capsys):
    e = write(tmp_path, "e.braid", "n=3\n2 2 1 2 2 -1 1 1\n")
    f = write(tmp_path, "f.braid", "n=3\n1 1 2 1 1 -2 2 2\n")
    assert run(capsys, "normalize", e)[1] == "p=2; factors=\n"
    assert run(capsys, "equal", e, f)[1] == "equal\n"
    g = write(tmp_path, "g.braid", "n=3\n1 2\n")
    h = write(tmp_path, "h.braid", "n=3\n2 1\n")
    assert run(capsys, "equal", g, h)[1] == "not equal\n"
    assert run(capsys, "perm", g)[1] == "231\n"


def test_equal_strand_mismatch(tmp_path, capsys):
    a = write(tmp_path, "a", "n=3\n1\n")
    b = write(tmp_path, "b", "n=4\n1\n")
    code, _, err = run(capsys, "equal", a, b)
    assert code == 1 and "strand" in err


def test_presentation_and_pipeline(tmp_path, capsys):
    code, text, _ = run(capsys, "presentation", "--family", "f-stratum", "--k", "4", "--i", "1", "--n", "2")
    assert code == 0 and text.startswith("gens: a12 a13 a23\n")
    path = write(tmp_path, "f.pres", text)
    assert run(capsys, "eliminate", path, "--gen", "a23", "--rel", "3")[1] == "gens: a12 a13\n"
    assert run(capsys, "abelianize", path)[1] == "Z^2\n"


def test_coset(capsys):
    assert run(capsys, "coset", "--family", "c-stratum", "--k", "3", "--i", "1", "--n", "1")[1] == "order=12\n"
    assert run(capsys, "coset", "--family", "sphere", "--k", "2", "--subgroup", "s1")[1] == "index=3\n"
    code, _, err = run(capsys, "coset", "--family", "artin", "--k", "3", "--max", "50")
    assert code == 1 and "exceeded" in err


def test_check_hom(tmp_path, capsys):
    assert run(capsys, "check-hom", "--family", "artin", "--k", "4", "--sym", "4",
               "--images", "2134,1324,1243")[1] == "true\n"
    path = write(tmp_path, "c.pres", "gens: a\nrel: a a a\n")
    assert run(capsys, "check-hom", path, "--sym", "2", "--images", "21")[1] == "false\n"


@pytest.mark.parametrize("argv", [
    ["check-hom", "--family", "artin", "--k", "4", "--sym", "4", "--images", "2134"],
    ["check-hom", "--family", "artin", "--k", "3", "--sym", "4", "--images", "213"],
    ["abelianize"],
    ["abelianize", "--family", "pb"],
    ["abelianize", "--family", "c-stratum", "--k", "3"],
    ["eliminate", "--family", "pb", "--k", "3", "--gen", "a12", "--rel", "9"],
    ["presentation", "--family", "nope"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_domain_errors(tmp_path, capsys):
    assert run(capsys, "delta", "--n", "1")[0] == 1
    assert run(capsys, "presentation", "--family", "f-stratum", "--k", "2", "--i", "3", "--n", "3")[0] == 1
    assert run(capsys, "normalize", str(tmp_path / "missing"))[0] == 1
    pres = write(tmp_path, "p", "gens: a b\nrel: a a b\n")
    assert run(capsys, "eliminate", pres, "--gen", "a", "--rel", "1")[0] == 1
    assert run(capsys, "eliminate", pres, "--gen", "z", "--rel", "1")[0] == 1


def test_extract_braid(tmp_path, capsys, monkeypatch):
    path = write(tmp_path, "loop.csv", sample_rotating_loop(3).to_text())
    code, out, _ = run(capsys, "extract-braid", path)
    assert code == 0 and out.startswith("n=3\n")
    assert len(out.split("\n")[1].split()) == 6
    monkeypatch.setenv("BRAIDFORGE_SEED", "5")
    assert run(capsys, "extract-braid", path, "--angle", "0.3")[0] == 0
    monkeypatch.setenv("BRAIDFORGE_SEED", "x")
    with pytest.raises(SystemExit):
        main(["extract-braid", path])
    bad = write(tmp_path, "bad.csv", "k=2\n0, 0, 0, 1, 0\n1, 0, 0, 2, 0\n")
    assert run(capsys, "extract-braid", bad, "--seed", "1")[0] == 1


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("n=3\n-1\n"))
    assert run(capsys, "normalize", "-")[1] == "p=-1; factors=231\n"


def test_paper_suite(tmp_path, capsys):
    out = tmp_path / "report.tsv"
    code, text, _ = run(capsys, "paper-suite", "--max-n", "3", "--output", str(out))
    assert code == 0 and out.read_text() == text
    code, text, _ = run(capsys, "paper-suite", "--max-n", "3", "--json")
    assert code == 0 and text.lstrip().startswith("{")
    assert run(capsys, "paper-suite", "--max-n", "2")[0] == 1

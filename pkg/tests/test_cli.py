import io
import subprocess
import sys

import pytest

from freelength.cli import UsageError, main, parse_families


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(scope="module")
def headline_files(tmp_path_factory):
    d = tmp_path_factory.mktemp("headline")
    code, out = run("bound", "--max-power", "20", "--ks", "1,2,6", "--exact", "--proof", str(d / "out.txt"))
    assert code == 0
    return d, out


def test_bound_exact_prints_both_values(headline_files):
    _, out = headline_files
    assert out == "0.8098765432098762\n328/405\n"


def test_bound_writes_lines_and_tree(headline_files):
    d, _ = headline_files
    lines = (d / "out.txt").read_text().splitlines()
    assert 100 <= len(lines) <= 300
    assert lines[-1].startswith("|abAB| <= 328/405 using ")
    assert (d / "out.tree").read_text().startswith("bound: |abAB| <= 0.8098765432098762\nproof: homogeneity\n")


def test_verify_generated_tree(headline_files, capsys):
    d, _ = headline_files
    code, out = run("verify", str(d / "out.tree"))
    assert code == 0
    assert out == "ok\n|abAB| <= 328/405\n"


def test_verify_tampered_tree(headline_files, tmp_path, capsys):
    d, _ = headline_files
    text = (d / "out.tree").read_text()
    bad = tmp_path / "bad.tree"
    bad.write_text(text.replace("conjugated-by: a", "conjugated-by: b", 1))
    code, out = run("verify", str(bad))
    assert code == 1 and out == ""
    assert capsys.readouterr().err.startswith("FAILED bad-subject at ")


def test_verify_with_assumptions(tmp_path, capsys):
    tree = tmp_path / "c2.tree"
    assert run("bound", "--word", "abABabAB", "--tree", str(tree))[0] == 0
    assert run("verify", str(tree)) == (0, "ok\n|abABabAB| <= 4\n")
    text = "bound: |abAB| <= 1/2\nproof: elementary\n"
    tree.write_text(text)
    assert run("verify", str(tree))[0] == 1
    assert "unjustified-assumption" in capsys.readouterr().err
    assert run("verify", str(tree), "--assume", "abAB=1/2") == (0, "ok\n|abAB| <= 1/2\n")
    assert run("verify", str(tree), "--assume", "abAB=0.5")[0] == 0


def test_bound_single_word():
    code, out = run("bound", "--word", "ABabAB", "--exact")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["2.0", "2"]
    assert lines[-1] == "|ABabAB| <= 2 using |ABa| <= 1 and |bAB| <= 1"


def test_bound_from_config(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("max_power = 10\nks = 1,2,6\n")
    code, out = run("bound", "--config", str(cfg))
    assert code == 0
    assert float(out.splitlines()[0]) < 1
    # flags override the file
    code, out = run("bound", "--config", str(cfg), "--max-power", "1", "--ks", "1")
    assert code == 0 and out.splitlines()[0] == "2.0"


def test_enumerate():
    code, out = run("enumerate", "--length", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "6" and len(lines) == 7
    assert "abAB 8" in lines
    assert run("enumerate", "--length", "0")[1] == "1\n(e) 1\n"


def test_scan(tmp_path):
    fam = tmp_path / "families.txt"
    fam.write_text("# candidates\na=a b=b\na=a b=abAB\n")
    code, out = run("scan", "--families", str(fam))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("a=a b=abAB max_rho=")
    assert lines[1] == "a=a b=b max_rho=1.0 at k=2 n=2"


def test_parse_families_errors():
    assert [(str(a), str(b)) for a, b in parse_families("a=ab b=B  # note\n\n")] == [("ab", "B")]
    for bad in ("a=ab\n", "a=ab b=x\n", "a=a b=b c=c\n"):
        with pytest.raises(UsageError):
            parse_families(bad)


@pytest.mark.parametrize(
    "argv",
    [
        ["bound", "--word", "abc"],
        ["bound", "--ks", "1,x"],
        ["bound", "--ks", "0"],
        ["enumerate", "--length", "20"],
        ["enumerate"],
        ["verify", "/nonexistent/proof.tree"],
        ["scan", "--families", "/nonexistent/f.txt"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2
    assert capsys.readouterr().err


def test_malformed_tree_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.tree"
    bad.write_text("bound: |a| <= 1.0\n   proof: length-is-normalized\n")
    assert run("verify", str(bad))[0] == 2
    assert "line 2" in capsys.readouterr().err


def test_bad_config_and_families_exit_2(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("speed = fast\n")
    assert run("bound", "--config", str(cfg))[0] == 2
    fam = tmp_path / "fam.txt"
    fam.write_text("a=a\n")
    assert run("scan", "--families", str(fam))[0] == 2


def test_byte_identical_replay(tmp_path):
    for name in ("one", "two"):
        d = tmp_path / name
        d.mkdir()
        code, out = run("bound", "--max-power", "8", "--exact", "--output", str(d / "p.txt"))
        (d / "stdout").write_text(out)
    for f in ("p.txt", "p.tree", "stdout"):
        assert (tmp_path / "one" / f).read_bytes() == (tmp_path / "two" / f).read_bytes()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "freelength", "enumerate", "--length", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "2"

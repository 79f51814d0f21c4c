import json
import subprocess
import sys

import pytest

from bindkit.cli import SUITES, cmd_table, main
from bindkit.terms import Names, alpha_eq, enum_terms, parse_term, print_term, var


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rename_example(capsys):
    code, out, _ = run(capsys, "rename", r"(\x. x y)", "--new", "x", "--old", "y")
    assert code == 0
    assert out.strip() == r"\x'. x' x"
    names = Names()
    assert alpha_eq(parse_term(out, names), parse_term(r"\z. z x", names))


def test_alphaeq(capsys):
    assert run(capsys, "alphaeq", r"\x. x", r"\y. y")[:2] == (0, "true\n")
    assert run(capsys, "alphaeq", r"\x. x", r"\y. x")[:2] == (0, "false\n")


@pytest.mark.parametrize("argv,expected", [
    (("fv", r"\x. y x"), "y"),
    (("fresh", "x0 x1", "x3"), "x2"),
    (("swap", r"\x. x y", "x", "y"), r"\y. y x"),
    (("subst", r"\y. y x", "y", "x"), r"\y'. y' y"),
    (("psubst", "x y", "--map", "x=y", "--map", "y=x"), "y x"),
    (("debruijn", r"\x. x y"), "λ. 0 y"),
    (("normalize", r"(\x. x) y"), "y"),
    (("length", r"\x. x x"), "3"),
    (("clam", r"\x. \y. x"), "2"),
    (("cfv", "x x", "x"), "2"),
    (("cbv", r"\x. \y. x"), "1"),
    (("caneta", r"\x. (y z) x"), "true"),
    (("caneta", r"\x. x x"), "false"),
    (("perm", "x y z", "--map", "x=y", "--map", "y=z", "--map", "z=x"), "y z x"),
    (("parse", r"(\x. x) y"), "Ap (Lm x (Vr x)) (Vr y)"),
])
def test_term_commands(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert (code, out.strip()) == (0, expected), err


def test_json_output(capsys):
    code, out, _ = run(capsys, "--json", "print", r"\x. x y")
    assert code == 0
    assert json.loads(out) == {"term": r"\x. x y", "debruijn": "λ. 0 y"}
    code, out, _ = run(capsys, "perm", "x0", "--map", "x0=x1", "--map", "x1=x0", "--json")
    assert json.loads(out)["perm"] == {"0": 1, "1": 0}


@pytest.mark.parametrize("argv", [
    ("parse", "\\x"),
    ("normalize", r"(\x. x x) (\x. x x)", "--fuel", "50"),
    ("perm", "x", "--map", "x=y"),
    ("rename", "x", "--new", "1x", "--old", "x"),
    ("psubst", "x", "--map", "nonsense"),
    ("laws", "fcb", "--fixtures", "/nonexistent/fixture.cfg"),
])
def test_domain_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert err.startswith("bindkit: error:") and err.count("\n") == 1


@pytest.mark.parametrize("argv", [
    ("bogus",),
    (),
    ("rename", "x"),
    ("laws", "nosuite"),
    ("laws", "renset", "--target", "nope"),
    ("laws", "renset", "--trials", "0"),
    ("normalize", "x", "--fuel", "lots"),
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_law_violation_exits_3(capsys):
    code, out, _ = run(capsys, "laws", "renset", "--target", "naive", "--trials", "500")
    assert code == 3
    assert "FAIL" in out
    assert run(capsys, "laws", "ce", "--target", "broken", "--trials", "200")[0] == 3


def test_help(capsys):
    assert run(capsys, "--help")[0] == 0
    text = cmd_table()
    for name in ("parse", "print", "fv", "fresh", "rename", "swap", "subst", "psubst",
                 "alphaeq", "debruijn", "normalize", "length", "clam", "cfv", "cbv",
                 "caneta", "perm", "laws", "crosscheck", "--fuel", "--seed", "--new"):
        assert name in text
    code, out, _ = run(capsys, "laws", "--help")
    assert code == 0
    assert all(s in out for s in SUITES)


def test_json_is_byte_deterministic_per_seed(capsys):
    argv = ("laws", "renset", "--target", "term", "--seed", "7", "--trials", "300", "--json")
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0 and out1 == out2
    data = json.loads(out1)
    assert [r["seed"] for r in data] == [7] * 4 and all(r["pass"] for r in data)
    _, other, _ = run(capsys, "laws", "renset", "--seed", "8", "--trials", "300", "--json")
    assert other != out1


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BINDKIT_SEED", "7")
    _, from_env, _ = run(capsys, "laws", "prop4", "--trials", "100", "--json")
    monkeypatch.delenv("BINDKIT_SEED")
    _, explicit, _ = run(capsys, "laws", "prop4", "--trials", "100", "--json", "--seed", "7")
    assert from_env == explicit
    monkeypatch.setenv("BINDKIT_SEED", "seven")
    assert run(capsys, "laws", "prop4")[0] == 2


def test_fixture_flag(capsys, tmp_path):
    cfg = tmp_path / "d.cfg"
    cfg.write_text("[domain]\nmodulus = 7\nap_coefficients = 1, 2, 3\nlm_points = 1\n"
                   "lm_weights = 1\nprobe = 0, 1, 2, 3\n")
    code, out, _ = run(capsys, "laws", "fcb", "--fixtures", str(cfg), "--trials", "30")
    assert code == 0 and "Z/7" in out


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "length", "--max-size", "4", "--trials", "50")
    assert code == 0 and out.startswith("PASS")


def test_print_parse_roundtrip_through_cli(capsys):
    vs = (var(0), var(1), var(2))
    for t in enum_terms(5, vs):
        text = print_term(t)
        code, out, _ = run(capsys, "print", text)
        assert code == 0
        assert parse_term(out) == t


def test_installed_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bindkit.cli", "alphaeq", r"\x. x", r"\y. y"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "true\n"

import csv
import io
import json
import subprocess
import sys

import pytest

from ennola.cli import main, parse_range, UsageError
from ennola.families import g_closed, g_m_poly, p_poly
from ennola.textfmt import parse_bipoly, parse_laurent


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_show_pd(capsys):
    assert run(capsys, "show", "pd", "--d", "3")[:2] == (0, "-3 + 3*X*Y - 1*Y^3\n")


def test_show_g(capsys):
    code, out, _ = run(capsys, "show", "g", "--a", "2", "--b", "1")
    assert code == 0 and parse_laurent(out) == g_closed(2, 1)
    _, composed, _ = run(capsys, "show", "g", "--a", "2", "--b", "1", "--composed")
    assert composed == out


def test_show_gm_round_trip(capsys):
    code, out, _ = run(capsys, "show", "gm", "--a", "1", "--b", "2", "--m", "7")
    assert code == 0 and parse_laurent(out) == g_m_poly(1, 2, 7)
    _, default_m, _ = run(capsys, "show", "gm", "--a", "1", "--b", "2")
    assert default_m == out


@pytest.mark.parametrize(
    "argv,parser",
    [
        (["pd", "--d", "25"], parse_bipoly),
        (["f", "--d", "9", "--spec"], parse_bipoly),
        (["s", "--a", "-3", "--b", "5"], parse_laurent),
        (["r", "--a", "2", "--b", "3", "--convention", "minus"], parse_laurent),
        (["e", "--a", "2", "--b", "1"], parse_laurent),
        (["rm", "--a", "3", "--b", "1"], parse_laurent),
        (["fab", "--a", "4", "--b", "3"], parse_bipoly),
    ],
)
def test_show_output_reparses(capsys, argv, parser):
    code, out, _ = run(capsys, "show", *argv)
    assert code == 0
    parser(out)


def test_show_f_general_reparses(capsys):
    from ennola.families import newton_f_general
    from ennola.textfmt import parse_tripoly

    _, out, _ = run(capsys, "show", "f", "--d", "6")
    assert parse_tripoly(out) == newton_f_general(6)


@pytest.mark.parametrize(
    "argv",
    [
        ["show", "pd"],
        ["show", "pd", "--d", "0"],
        ["show", "fab", "--a", "2", "--b", "2"],
        ["show", "r", "--a", "1", "--b", "2", "--convention", "both"],
        ["ennola", "--l", "5..3"],
        ["ennola", "--l", "x"],
        ["check", "prop2", "--d", "3..1"],
        ["check", "prop2", "--jobs", "0"],
        ["check", "nope"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_range():
    assert parse_range("3..7") == (3, 7)
    assert parse_range("-8..8") == (-8, 8)
    assert parse_range("4") == (4, 4)
    for bad in ("7..3", "a..b", "1..", ""):
        with pytest.raises(UsageError):
            parse_range(bad)


def test_check_prop2_d_max(capsys):
    code, out, _ = run(capsys, "check", "prop2", "--d-max", "200", "--format", "jsonl")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 200
    assert [r["params"]["d"] for r in recs] == list(range(1, 201))


def test_minus_convention_exits_1(capsys):
    code, out, _ = run(capsys, "check", "g-closed", "--a", "1", "--b", "2", "--convention", "minus", "--format", "jsonl")
    rec = json.loads(out)
    assert code == 1 and rec["pass"] is False and rec["convention"] == "minus"
    assert "exponent" in rec["witness"]


def test_both_conventions(capsys):
    code, out, _ = run(capsys, "check", "conj14", "--a", "2", "--b", "1", "--convention", "both", "--format", "jsonl")
    recs = [json.loads(line) for line in out.splitlines()]
    eq3 = [r for r in recs if r["check"] == "conj14_eq3"]
    assert code == 1
    assert [(r["convention"], r["pass"]) for r in eq3] == [("plus", True), ("minus", False)]


def test_conj20_jsonl_schema(capsys):
    code, out, _ = run(capsys, "check", "conj20", "--a", "3", "--b", "1", "--format", "jsonl")
    rec = json.loads(out)
    assert code == 0
    assert rec == {
        "check": "conj20", "params": {"a": 3, "b": 1, "m": 13}, "convention": "plus", "pass": True,
        "case": 1, "deg": -1, "N": 1, "N_expected": 1, "lc": "8/13", "expected_lc": "8/13", "B": "7",
    }


def test_csv_has_one_header_per_block(capsys):
    _, out, _ = run(capsys, "check", "conj14", "--a=-2..2", "--b=-3..3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    headers = [r for r in rows if r[0] == "check"]
    assert [h[1:3] for h in headers] == [["a", "b"], ["a", "b"]]
    assert len(headers) == 2


def test_text_table(capsys):
    code, out, _ = run(capsys, "ennola", "--l", "3..5")
    lines = out.splitlines()
    assert code == 0 and lines[0].split()[:2] == ["check", "l"]
    assert len([ln for ln in lines if ln.startswith("ennola ")]) == 3


def test_ennola_print(capsys):
    code, out, _ = run(capsys, "ennola", "--l", "3", "--print", "--format", "jsonl")
    rec = json.loads(out)
    assert code == 0
    assert rec["min_poly"] == "-1 - 3*X + 2*X^2 + 1*X^3"
    assert rec["shifted_min_poly"] == "-1 + 4*X + 5*X^2 + 1*X^3"


def test_ennola_default_range(capsys):
    _, out, _ = run(capsys, "ennola", "--format", "jsonl")
    assert len(out.splitlines()) == 98


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "check", "integrality", "--d", "1..5", "--format", "jsonl", "--out", str(target))
    assert code == 0 and out == ""
    assert len(target.read_text().splitlines()) == 5


def test_seed_changes_random_draws(capsys):
    _, a, _ = run(capsys, "check", "corollary1", "--trials", "5", "--seed", "1", "--format", "jsonl")
    _, b, _ = run(capsys, "check", "corollary1", "--trials", "5", "--seed", "2", "--format", "jsonl")
    _, c, _ = run(capsys, "check", "corollary1", "--trials", "5", "--seed", "1", "--format", "jsonl")
    assert a == c and a != b


def test_jobs_do_not_change_bytes(capsys):
    argv = ["check", "conj20", "--max", "6", "--convention", "both", "--format", "csv"]
    _, serial, _ = run(capsys, *argv, "--jobs", "1")
    _, parallel, _ = run(capsys, *argv, "--jobs", "4")
    assert serial == parallel


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ennola", "show", "pd", "--d", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and parse_bipoly(proc.stdout) == p_poly(2)

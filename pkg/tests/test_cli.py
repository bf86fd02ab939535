import json
import subprocess
import sys

import pytest

from picardchi.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wt0_text(capsys):
    code, out, _ = run(capsys, "wt0", "--g", "3", "--format", "text")
    assert code == 0
    assert out.strip() == "1/3 * P1*P3/P6 - 1/3 * P1^4/P2^3"


def test_top_json(capsys):
    code, out, _ = run(capsys, "top", "--g", "2", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and len(obj["terms"]) == 8
    assert obj["terms"][0] == {"coeff": "2/5", "exps": {"1": 1, "2": 1, "5": 1, "10": -1}}


def test_latex(capsys):
    code, out, _ = run(capsys, "wt0", "--g", "2", "--format", "latex")
    assert code == 0 and r"\frac{P_{2} P_{3}}{P_{6}}" in out


def test_genus_one_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["wt0", "--g", "1"])
    assert exc.value.code == 2
    assert "g >= 2" in capsys.readouterr().err


def rows(out):
    return {int(n): v for n, v in (line.split("\t") for line in out.strip().splitlines())}


def test_chi_top(capsys):
    code, out, _ = run(capsys, "chi", "--g", "2", "--kind", "top", "--max-n", "8")
    r = rows(out)
    assert code == 0 and r[0] == "2" and r[7] == r[8] == "0"


def test_chi_wt0(capsys):
    r = rows(run(capsys, "chi", "--g", "2", "--kind", "wt0", "--max-n", "5")[1])
    assert r[4] == r[5] == "0"
    assert rows(run(capsys, "chi", "--g", "3", "--kind", "wt0", "--max-n", "0")[1]) == {0: "0"}


def test_equivariant(capsys):
    assert run(capsys, "equivariant", "--g", "2", "--kind", "wt0", "--n", "0")[1].strip() == "-1"
    out = run(capsys, "equivariant", "--g", "2", "--kind", "wt0", "--n", "0", "--format", "json")[1]
    assert json.loads(out) == "-1"
    out = run(capsys, "equivariant", "--g", "2", "--kind", "top", "--n", "7")[1].strip()
    assert out and out != "0"


@pytest.mark.parametrize("argv", [
    ["verify", "tables"],
    ["verify", "ncount", "--depth", "14"],
    ["verify", "bounds"],
    ["verify", "properties", "--seed", "0", "--depth", "6"],
])
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out and all(line.startswith("PASS") for line in out.strip().splitlines())


def test_verify_tables_count(capsys):
    out = run(capsys, "verify", "tables")[1]
    assert len(out.strip().splitlines()) == 11


def test_verify_json_and_failure_exit(capsys, monkeypatch):
    from picardchi import verify
    from picardchi.plaurent import PLaurent

    good = verify.load_table("top")
    bad = dict(good)
    bad[2] = good[2] + PLaurent.P(1)
    monkeypatch.setattr(verify, "load_table",
                        lambda kind: bad if kind == "top" else dict.fromkeys([], None))
    code, out, _ = run(capsys, "verify", "tables", "--json")
    report = json.loads(out)
    assert code == 1
    assert not report["passed"]
    assert [c["status"] for c in report["checks"]] == ["fail", "pass", "pass"]


def test_deterministic_output(capsys):
    a = run(capsys, "verify", "properties", "--seed", "3", "--depth", "4")[1]
    b = run(capsys, "verify", "properties", "--seed", "3", "--depth", "4")[1]
    assert a == b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "picardchi", "wt0", "--g", "2"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "-1/2 * P1^2/P3 - 1/3 * P1^3/P2^2 - 1/6 * P2*P3/P6"

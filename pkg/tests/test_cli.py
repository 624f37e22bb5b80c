import io
import json
import subprocess
import sys

import pytest

from genera.cli import main
from genera.zeta import ZetaExpr


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def dim4(tmp_path):
    path = tmp_path / "dim4.json"
    path.write_text(json.dumps({"dim": 4, "entries": [
        {"partition": [2, 2], "value": "828/1"}, {"partition": [4], "value": "324/1"}]}))
    return str(path)


def test_coeffs_todd_pretty():
    code, out, _ = run("coeffs", "todd", "3", "--format", "pretty")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 3 and "(2,1)  1/24" in lines and "(3)  0/1" in lines


def test_coeffs_td_half_reduced():
    code, out, _ = run("coeffs", "td_half", "4", "--reduce")
    assert code == 0 and "(2,2)  7/5760" in out.splitlines()


def test_coeffs_gamma():
    assert run("coeffs", "gamma", "1")[1] == "(1)  gamma\n"


def test_coeffs_json_round_trip():
    code, out, _ = run("--format", "json", "coeffs", "gamma", "3", "--reduce")
    data = json.loads(out)
    assert data["genus"] == "gamma" and data["weight"] == 3
    assert len(data["entries"]) == 3
    for e in data["entries"]:
        x = ZetaExpr.from_json(e["coef"])
        assert ZetaExpr.from_json(e["reduced"]) == x.reduce_even()


def test_coeffs_csv():
    code, out, _ = run("coeffs", "todd", "2", "--format", "csv")
    assert out.splitlines() == ["partition,coef", "[2],1/12", '"[1, 1]",1/12']


def test_zeta_star():
    assert run("zeta", "star", "2", "2")[1] == "zeta(2)^2 + zeta(4)\n"


def test_zeta_numeric():
    code, out, _ = run("zeta", "sym", "2", "2", "--reduce", "--numeric", "15")
    assert out.splitlines() == ["1/60*pi^4", "1.62348485056671"]


def test_mobius():
    assert run("mobius", "[[1],[2],[3]]", "[[1,2,3]]")[1] == "2\n"


def test_malformed_json_reports_position():
    code, out, err = run("mobius", "[[1],[2]", "[[1,2]]")
    assert code == 2 and out == ""
    assert "line 1" in err and "column" in err


def test_domain_and_capability_exit_codes(tmp_path):
    assert run("zeta", "star", "2", "1")[0] == 2
    assert run("coeffs", "todd", "11")[0] == 3
    assert run("zeta", "sym", "3", "--numeric", "5000")[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 4,\n "entries": [}')
    code, _, err = run("convert", "--to", "ch", str(bad))
    assert code == 2 and "line 2" in err


def test_convert_pair(dim4):
    code, out, _ = run("--format", "json", "convert", "--to", "ch", dim4)
    data = json.loads(out)
    row = {tuple(e["partition"]): e["value"] for e in data["entries"]}
    assert row[(4,)] == "15/1"  # 828/12 - 324/6
    back = run("--format", "json", "convert", "--to", "chern", dim4)
    assert back[0] == 0


def test_convert_hk_matches_full(dim4):
    full = json.loads(run("--format", "json", "convert", "--to", "ch", dim4)[1])
    hk = json.loads(run("--format", "json", "convert", "--to", "ch", "--hk", dim4)[1])
    values = {tuple(e["partition"]): e["value"] for e in full["entries"]}
    for e in hk["entries"]:
        assert values[tuple(e["partition"])] == e["value"]


def test_eval_with_report(dim4):
    code, out, _ = run("eval", "td_half", dim4, "--hk-report")
    assert code == 0
    assert out.splitlines()[0] == "25/32"
    assert "report only" in out


def test_partitions():
    assert run("partitions", "4")[1].count("\n") == 5
    assert run("partitions", "4", "--set")[1].count("\n") == 15


def test_verify_single_suite():
    code, out, _ = run("verify", "mobius", "--seed", "3")
    assert code == 0 and out.startswith("mobius: PASS")
    assert run("verify", "nonsense")[0] == 2


def test_deterministic_output():
    a = run("--format", "json", "coeffs", "gamma", "4")
    b = run("--format", "json", "coeffs", "gamma", "4")
    assert a == b


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "genera", "zeta", "star", "2", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "zeta(2)^2 + zeta(4)\n"

import json
import subprocess
import sys

import pytest

from singcount.cli import main
from singcount.polyring import Ring
from singcount.targetspec import DegreeRange, TargetSpec, TargetSyntaxError, parse_target


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_nodal_p2(capsys):
    code, out, _ = run(capsys, "count", "--sing", "A1", "--target", "pm(m=2,d=4)")
    assert code == 0
    assert out.splitlines()[0] == "27"


def test_count_tacnode_p1p1(capsys):
    code, out, _ = run(capsys, "count", "--sing", "A3", "--target", "product((m=1,d=1),(m=1,d=1))")
    assert code == 0
    assert out.splitlines()[0] == "0"


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--sing", "A2", "--target", "pm(m=2,d=d)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"singularity", "target", "dimension", "route", "value", "checks", "discrepancies"}
    assert doc["value"]["text"] == "12*d^2 - 36*d + 24"
    assert doc["route"] == "A2_det"
    assert doc["dimension"] == 2
    assert all(isinstance(t["coeff"], str) for t in doc["value"]["terms"])
    # round trip through the text form and through the term list
    ring = Ring.parameters(["d"])
    p = ring.parse(doc["value"]["text"])
    q = ring.parse(" + ".join(f"{t['coeff']}*{t['monomial']}" for t in doc["value"]["terms"]).replace("+ -", "- "))
    assert p == q == ring.parse("12*d^2 - 36*d + 24")


def test_count_json_reports_discrepancy(capsys):
    code, out, _ = run(capsys, "count", "--sing", "A3", "--target", "product((m=1,d=d1),(m=1,d=d2))", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["value"]["text"] == "100*d1*d2 - 128*d1 - 128*d2 + 156"
    assert [d["paper_value"] for d in doc["discrepancies"]] == ["100*d1*d2 - 128*d1 - 128*d2 + 136"]


def test_count_route_proj(capsys):
    code, out, _ = run(capsys, "count", "--sing", "A2", "--target", "pm(m=2,d=3)", "--route", "proj", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "24"
    assert "route: A2_proj" in lines
    assert "check route_agreement: ok" in lines


def test_route_only_for_a2(capsys):
    code, _, err = run(capsys, "count", "--sing", "A1", "--target", "pm(m=2,d=3)", "--route", "det")
    assert code == 2


@pytest.mark.parametrize("target", ["pm(m=2,d=)", "pm(m=0,d=2)", "sphere(m=2)", "pm(m=2,d=4", "pm(m=2,d=1..3)"])
def test_bad_target_exit_2(capsys, target):
    code, _, err = run(capsys, "count", "--sing", "A1", "--target", target)
    assert code == 2
    assert "error" in err


def test_bad_flag_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--sing", "A9", "--target", "pm(m=2,d=2)"])
    assert exc.value.code == 2


def test_formula(capsys):
    assert run(capsys, "formula", "--sing", "A1", "--dim", "2")[1].strip() == "3*c1^2 + 2*c1*x1 + x2"
    assert run(capsys, "formula", "--sing", "A1", "--dim", "1")[1].strip() == "2*c1 + x1"
    code, out, _ = run(capsys, "formula", "--sing", "A3", "--dim", "2", "--json")
    doc = json.loads(out)
    assert doc["value"]["text"] == "50*c1^2 + 64*c1*x1 + 17*x1^2 + 5*x2"


def test_formula_a3_on_p2_via_table(capsys, tmp_path):
    # the generic surface formula evaluated on P^2 Chern numbers at d = 5
    d = 5
    path = tmp_path / "p2.json"
    path.write_text(json.dumps({"dimension": 2, "entries": {"c1^2": d * d, "c1*x1": -3 * d, "x1^2": 9, "x2": 3}}))
    code, out, _ = run(capsys, "count", "--sing", "A3", "--target", f"table(file={path})")
    assert code == 0
    assert int(out.splitlines()[0]) == 50 * d * d - 192 * d + 168


def test_verify_default(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out
    assert "2 documented discrepancies:" in out


def test_verify_subset_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-dim", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    full = json.loads(run(capsys, "verify", "--json")[1])
    assert doc["ok"] and len(doc["checks"]) < len(full["checks"])
    assert len(doc["discrepancies"]) == 2


def test_verify_corrupted_table(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"dimension": 2, "entries": {"c1^2": ')
    code, _, err = run(capsys, "verify", "--table", str(path))
    assert code == 2


def test_verify_with_table(capsys, tmp_path):
    path = tmp_path / "p1p1.json"
    path.write_text(json.dumps({"dimension": 2, "entries": {"c1^2": 8, "c1*x1": -8, "x1^2": 8, "x2": 4}}))
    code, out, _ = run(capsys, "verify", "--max-dim", "2", "--table", str(path))
    assert code == 0
    assert "table target A1 = 12" in out


def test_incomplete_table_is_input_error(capsys, tmp_path):
    path = tmp_path / "partial.json"
    path.write_text(json.dumps({"dimension": 2, "entries": {"c1^2": 8}}))
    code, _, err = run(capsys, "count", "--sing", "A1", "--target", f"table(file={path})")
    assert code == 2
    assert "no table entry" in err


def test_table_text_p2_nodal(capsys):
    code, out, _ = run(capsys, "table", "--sing", "A1", "--target", "pm(m=2,d=1..5)")
    assert code == 0
    values = [int(line.split()[-1]) for line in out.splitlines()[2:]]
    assert values == [0, 3, 12, 27, 48]


def test_table_csv_p2_cusp(capsys):
    code, out, _ = run(capsys, "table", "--sing", "A2", "--target", "pm(m=2,d=1..4)", "--format", "csv", "--jobs", "2")
    assert out.splitlines() == ["d,value", "1,0", "2,0", "3,24", "4,72"]


def test_table_json_p1p1_diagonal(capsys):
    code, out, _ = run(capsys, "table", "--sing", "A3", "--target",
                       "product((m=1,d=1..3),(m=1,d=1..3))", "--diagonal", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["degrees"] for r in rows] == [{"d1": k, "d2": k} for k in (1, 2, 3)]
    # 100 k^2 - 256 k + 156
    assert [int(r["value"]["text"]) for r in rows] == [0, 44, 288]


def test_table_grid(capsys):
    code, out, _ = run(capsys, "table", "--sing", "A1", "--target",
                       "product((m=1,d=1..2),(m=1,d=1..3))", "--format", "csv")
    assert len(out.splitlines()) == 1 + 6


def test_table_diagonal_unequal(capsys):
    code, _, _ = run(capsys, "table", "--sing", "A1", "--target",
                     "product((m=1,d=1..2),(m=1,d=1..3))", "--diagonal")
    assert code == 2


@pytest.mark.parametrize("text", [
    "pm(m=2,d=4)", "pm(m=2,d=d)", "product((m=1,d=d1),(m=1,d=d2))", "generic(m=3)",
    "table(file=/tmp/x.json)", "product((m=2,d=3),(m=1,d=e))",
])
def test_target_round_trip(text):
    spec = parse_target(text)
    assert str(spec) == text
    assert parse_target(str(spec)) == spec


def test_target_whitespace_and_ranges():
    assert parse_target(" pm( m = 2 , d = 4 ) ") == TargetSpec("pm", ((2, 4),))
    spec = parse_target("pm(m=2,d=1..3)", allow_ranges=True)
    assert spec.factors == ((2, DegreeRange(1, 3)),)
    assert parse_target(str(spec), allow_ranges=True) == spec
    with pytest.raises(TargetSyntaxError):
        parse_target("pm(m=2,d=3..1)", allow_ranges=True)


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "singcount", "formula", "--sing", "A2", "--dim", "2"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "12*c1^2 + 12*c1*x1 + 2*x1^2 + 2*x2"

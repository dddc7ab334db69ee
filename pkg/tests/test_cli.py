import csv
import io
import json
import subprocess
import sys

import pytest

from affadm import admset
from affadm.cli import counterexample, parse_setspec, run
from affadm.rootdata import TypeB, TypeD, mu_shape
from affadm.weyl import parse_element


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_adm_central_cocharacter(capsys):
    code, out, _ = call(capsys, "adm", "--type", "D", "--m", "2", "--q", "0", "--I", "0,1,2")
    assert code == 0
    data = json.loads(out)
    assert data["cardinality"] == 1
    assert data["reps"] == ["t:[1,1,1,1];s:[1,2,3,4]"]


def test_json_round_trip(capsys):
    code, out, _ = call(capsys, "sperm", "--type", "D", "--m", "3", "--q", "1")
    data = json.loads(out)
    reps = {parse_element(r, 6) for r in data["reps"]}
    assert reps == admset.spin_permissible_set(TypeD(3), mu_shape(TypeD(3), 1)).reps
    assert data["cardinality"] == len(reps) == 33


def test_csv_output(capsys):
    code, out, _ = call(capsys, "perm", "--type", "B", "--m", "1", "--q", "1", "--I", "0", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["element", "nu_0"]
    assert len(rows) == 1 + admset.permissible_set(TypeB(1), (2, 1, 0), ["0"]).cardinality


def test_facet_alias(capsys):
    _, a, _ = call(capsys, "adm", "--type", "D", "--m", "2", "--q", "1", "--facet", "{0}")
    _, b, _ = call(capsys, "adm", "--type", "D", "--m", "2", "--q", "1", "--I", "0")
    assert a == b


def test_compare_equal_and_symmetric(capsys):
    code, out, _ = call(capsys, "compare", "--lhs", "adm(D,3,2,Iwahori)", "--rhs", "sperm(D,3,2,Iwahori)")
    assert code == 0 and json.loads(out)["equal"]
    code2, out2, _ = call(capsys, "compare", "--lhs", "sperm(D,3,2,Iwahori)", "--rhs", "adm(D,3,2,Iwahori)")
    assert code2 == 0 and json.loads(out2)["lhs"] == 105


def test_compare_different_sets_exits_one(capsys):
    code, out, _ = call(capsys, "compare", "--lhs", "adm(D,2,0)", "--rhs", "adm(D,2,1)")
    assert code == 1
    data = json.loads(out)
    assert not data["equal"] and data["lhs"] == 1 and len(data["only_rhs"]) == 9


def test_setspec_parsing():
    assert parse_setspec("sperm(B,2,1,{0,2},{0,1,2})").cardinality > 0
    assert parse_setspec("adm(GU,2,3:1,{2})").kind.family.value == "GU"
    for bad in ["adm(D,2)", "foo(D,2,1)", "adm D 2 1"]:
        with pytest.raises(ValueError):
            parse_setspec(bad)


def test_counterexample_report(capsys):
    code, out, _ = call(capsys, "counterexample", "--name", "d4-perm-not-adm")
    data = json.loads(out)
    assert code == 0
    assert data["perm"] and data["perm_hull"] and not data["sperm"] and not data["adm"]
    assert data["length"] == 12
    assert data["spin_failures"] == [{"k": "2", "nu": ["2", "2", "1", "1", "1", "1", "0", "0"],
                                      "c": "2", "q": 3, "c_parity_matches_q": False}]


def test_b3_counterexample():
    data = counterexample("b3-perm-not-adm")
    assert data["perm"] and not data["adm"]
    assert data["sperm"] == data["adm"]


def test_bruhat_leq_command(capsys):
    code, out, _ = call(capsys, "bruhat-leq", "--type", "D", "--m", "2",
                        "--w", "t:[1,1,1,1];s:(12)(34)", "--x", "t:[1,1,1,1];s:id")
    assert code == 0 and json.loads(out)["leq"] is False
    code, out, _ = call(capsys, "bruhat-leq", "--type", "D", "--m", "2",
                        "--w", "t:[1,1,1,1];s:id", "--x", "t:[1,1,1,1];s:id")
    assert json.loads(out)["leq"] is True


def test_translate_command(capsys):
    code, out, _ = call(capsys, "translate", "--m", "2", "--w", "t:[2,1,1,0];s:[1,2,3,4]")
    assert code == 0
    assert json.loads(out)["b"] == "t:[1,0,1,2,1];s:[1,2,3,4,5]"


def test_gu_signature_handling(capsys):
    code, out, _ = call(capsys, "adm", "--type", "GU", "--m", "2", "--signature", "3,1", "--I", "0")
    assert code == 0 and json.loads(out)["cardinality"] > 0
    assert call(capsys, "adm", "--type", "GU", "--m", "2", "--q", "1")[0] == 2
    assert call(capsys, "adm", "--type", "GU", "--m", "2", "--signature", "4,2")[0] == 2
    assert call(capsys, "perm", "--type", "GU", "--m", "2", "--signature", "3,1")[0] == 2


def test_inheritance_command(capsys):
    code, out, _ = call(capsys, "--seed", "5", "inheritance", "--m", "1", "--bound", "4", "--samples", "20")
    assert code == 0 and json.loads(out)["violations"] == []


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["adm", "--type", "D", "--m", "2"],
    ["adm", "--type", "D", "--m", "1", "--q", "0"],
    ["adm", "--type", "D", "--m", "2", "--q", "1", "--I", "1"],
    ["bruhat-leq", "--type", "D", "--m", "2", "--w", "garbage", "--x", "t:[1,1,1,1];s:id"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert call(capsys, *argv)[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "affadm", "adm", "--type", "B", "--m", "1", "--q", "0"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["cardinality"] == 1

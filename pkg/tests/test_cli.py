import json
import subprocess
import sys

import jsonschema
import pytest

from orbit_concavity import schemas
from orbit_concavity.cli import EXIT_DISAGREE, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_su23_phi2_is_not(capsys):
    code, out, _ = run(capsys, "classify", "su(2,3)", "--phi", "2")
    assert code == EXIT_OK
    assert "decision: Not" in out
    assert "classification table: Not" in out


def test_classify_fii_phi1_json(capsys):
    code, out, _ = run(capsys, "classify", "fII", "--phi", "1", "--format", "json", "--certificate")
    doc = json.loads(out)
    jsonschema.validate(doc, schemas.VERDICT)
    assert doc["decision"] == "EssentiallyPseudoconcave" and doc["table_decision"] == "EssentiallyPseudoconcave"
    assert doc["certificate"] is not None


def test_classify_complex_sl3(capsys):
    code, out, _ = run(capsys, "classify", "slC3", "--phi", "1", "--format", "json")
    assert json.loads(out)["decision"] == "EssentiallyPseudoconcave"


# split form: the orbit is totally real, the holomorphic index is empty and every Levi form is zero
@pytest.mark.parametrize("route,expected", [("proposition", "Inapplicable"), ("lemma", "EssentiallyPseudoconcave"),
                                            ("default", "EssentiallyPseudoconcave")])
def test_classify_routes_on_non_fundamental_spec(capsys, route, expected):
    code, out, _ = run(capsys, "classify", "sl(3,R)", "--phi", "1", "--route", route, "--format", "json")
    doc = json.loads(out)
    assert doc["decision"] == expected and doc["fundamental"] is False
    assert doc["spec"]["holomorphic_index"] == []


def test_inspect_su13_support_is_an_indefinite_diagonal_pair(capsys):
    code, out, _ = run(capsys, "inspect", "su13", "--phi", "2", "--gamma", "1,1,1", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schemas.MATRIX_DUMP)
    assert doc["class"] == "Indefinite"
    entries = doc["entries"]
    support = [i for i, row in enumerate(entries) if any(v != ["0", "0"] for v in row)]
    assert len(support) == 2
    block = [[entries[i][j] for j in support] for i in support]
    assert block[0][1] == block[1][0] == ["0", "0"]
    (a, _), (b, _) = block[0][0], block[1][1]
    assert int(a) * int(b) < 0


def test_inspect_fii_rank_one(capsys):
    code, out, _ = run(capsys, "inspect", "fII", "--phi", "3", "--gamma", "1,2,3,2")
    assert code == EXIT_OK
    assert "rank 1" in out


def test_inspect_non_real_gamma_reports_both_parts(capsys):
    code, out, _ = run(capsys, "inspect", "su(2,3)", "--phi", "2", "--gamma", "1,1,1,0", "--format", "json")
    doc = json.loads(out)
    assert doc["real"] is False and set(doc["parts"]) == {"Re L", "Im L"}
    for part in doc["parts"].values():
        jsonschema.validate(part, schemas.MATRIX_DUMP)


@pytest.mark.parametrize(
    "argv",
    [
        ["inspect", "su13", "--phi", "2", "--gamma", "0,0,0"],
        ["inspect", "su13", "--phi", "2", "--gamma", "0,1,0"],
        ["inspect", "su13", "--phi", "2", "--gamma", "a,b"],
        ["classify", "su(9,9)", "--phi", "1"],
        ["classify", "su(1,3)", "--phi", "7"],
        ["classify"],
        ["frobnicate"],
        ["catalog", "--max-rank", "0"],
    ],
)
def test_usage_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == EXIT_USAGE


def test_gamma_error_lists_valid_roots(capsys):
    code, _, err = run(capsys, "inspect", "su13", "--phi", "2", "--gamma", "0,0,0")
    assert code == EXIT_USAGE and "valid gamma: 1,1,1" in err


def test_verify_theorem_rank_four(capsys):
    code, out, err = run(capsys, "verify-theorem", "--max-rank", "4")
    assert code == EXIT_OK
    assert "0 disagreements" in out and "0 disagreements" in err


def test_verify_theorem_json_schema(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--max-rank", "3", "--format", "json")
    jsonschema.validate(json.loads(out), schemas.REPORT)


def test_verify_theorem_csv_rows(capsys):
    code, out, _ = run(capsys, "verify-theorem", "--max-rank", "3", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0].startswith("form,phi,decision_algorithmic,decision_table,agree")
    assert len(lines) > 100


def test_verify_theorem_exit_two_on_disagreement(capsys, monkeypatch):
    import orbit_concavity.classifier as clf
    monkeypatch.setattr(clf, "_table_condition", lambda d, phi: (False, "never"))
    code, _, err = run(capsys, "verify-theorem", "--max-rank", "2")
    assert code == EXIT_DISAGREE
    assert "0 disagreements" not in err


def test_internal_failure_exits_three(capsys, monkeypatch):
    import orbit_concavity.cli as cli
    from orbit_concavity.leviform import RealStructureError

    def boom(_):
        raise RealStructureError("forced")

    monkeypatch.setattr(cli, "build_real_structure", boom)
    code, _, err = run(capsys, "classify", "su13", "--phi", "1")
    assert code == 3 and "internal invariant failure" in err


def test_max_rank_is_capped_with_warning(capsys):
    code, out, err = run(capsys, "catalog", "--max-rank", "99", "--format", "json")
    assert code == EXIT_OK
    assert "capped to 8" in err
    doc = json.loads(out)
    jsonschema.validate(doc, schemas.CATALOG)
    assert max(e["rank"] for e in doc) == 8


def test_env_var_bounds_catalog(capsys, monkeypatch):
    monkeypatch.setenv("ORBIT_CONCAVITY_MAX_RANK", "2")
    code, out, _ = run(capsys, "catalog", "--format", "json")
    assert max(e["rank"] for e in json.loads(out)) == 2


def test_enumerate_one_algebra(capsys):
    code, out, _ = run(capsys, "enumerate", "su(1,3)")
    lines = out.strip().splitlines()
    assert len(lines) == 8
    assert any("Not" in line for line in lines)


def test_output_file(tmp_path, capsys):
    target = tmp_path / "v.json"
    code, out, _ = run(capsys, "classify", "g", "--phi", "1", "--format", "json", "-o", str(target))
    assert out == "" and json.loads(target.read_text())["algebra"] == "g"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbit_concavity", "classify", "su(1,3)", "--phi", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "decision: Not" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "orbit_concavity", "classify", "nope"],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE

import json
import re

import pytest

from gpcoh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, "--format", "json", *argv)
    return code, json.loads(out), err


def test_roots_command(capsys):
    code, doc, _ = run_json(capsys, "roots", "A", "6")
    assert code == 0
    assert doc["schema_version"] == 1
    assert doc["result"]["num_positive_roots"] == 21
    assert doc["result"]["adjoint_dimension"] == 48
    assert doc["failures"] == []


def test_roots_g2(capsys):
    code, doc, _ = run_json(capsys, "roots", "G", "2")
    assert code == 0
    assert doc["result"]["num_positive_roots"] == 6
    assert doc["result"]["adjoint_dimension"] == 14


def test_roots_invalid_type_exits_nonzero_with_diagnostic(capsys):
    code, out, err = run(capsys, "roots", "Z", "9")
    assert code == 2
    assert "valid types" in err


def test_roots_invalid_type_json_error(capsys):
    code, doc, _ = run_json(capsys, "roots", "Z", "9")
    assert code == 2
    assert "valid types" in doc["error"]


def test_bwb_singular_weight(capsys):
    code, doc, _ = run_json(
        capsys, "bwb", "A", "6", "--crossed", "4", "--weight", "0,0,1,-3,0,0"
    )
    assert code == 0
    assert doc["result"]["outcome"] == "all_vanish"


def test_bwb_tangent_weight(capsys):
    code, doc, _ = run_json(
        capsys, "bwb", "A", "6", "--crossed", "4", "--weight", "1,0,0,0,0,1"
    )
    assert code == 0
    assert doc["result"]["degree"] == 0
    assert doc["result"]["dimension"] == 48


def test_bwb_negative_line_bundle_on_p1(capsys):
    code, doc, _ = run_json(capsys, "bwb", "A", "1", "--crossed", "1", "--weight", "-1")
    assert code == 0
    assert doc["result"]["outcome"] == "all_vanish"


def test_bwb_bad_weight_length(capsys):
    code, doc, _ = run_json(capsys, "bwb", "A", "6", "--crossed", "4", "--weight", "1,2")
    assert code == 2
    assert "coefficients" in doc["error"]


def test_lr_pieri(capsys):
    code, doc, _ = run_json(capsys, "lr", "1,1,1", "1", "--rows", "4")
    assert code == 0
    table = {tuple(e["partition"]): e["coefficient"] for e in doc["result"]["coefficients"]}
    assert table == {(2, 1, 1): 1, (1, 1, 1, 1): 1}


def test_lr_dimension_sum(capsys):
    code, doc, _ = run_json(capsys, "lr", "2,1", "2,1", "--rows", "3")
    assert code == 0
    assert doc["result"]["gl_dimension_sum"] == 64


def test_koszul_normal_twist(capsys):
    code, doc, _ = run_json(capsys, "koszul", "--scenario", "cayley.json", "--twist", "normal")
    assert code == 0
    assert doc["result"]["determined"] is True
    assert doc["result"]["table"]["degrees"]["0"]["total"] == 34
    assert doc["result"]["hints_used"] == [
        {"target_term": 0, "degree": 0, "rank": 1, "origin": "default_maximal"}
    ]


def test_koszul_tangent_twist(capsys):
    code, doc, _ = run_json(capsys, "koszul", "--scenario", "cayley", "--twist", "tangent")
    assert code == 0
    degrees = doc["result"]["table"]["degrees"]
    assert degrees == {"0": {"total": 48}}
    assert doc["result"]["hints_used"] == []


def test_koszul_trivial_twist(capsys):
    code, doc, _ = run_json(capsys, "koszul", "--scenario", "cayley", "--twist", "trivial")
    assert code == 0
    assert doc["result"]["table"]["degrees"]["0"]["total"] == 1


def test_koszul_unknown_twist(capsys):
    code, doc, _ = run_json(capsys, "koszul", "--scenario", "cayley", "--twist", "bogus")
    assert code == 2
    assert "no twist" in doc["error"]


def test_indeterminate_koszul_exits_nonzero_with_failure_list(capsys, tmp_path):
    from gpcoh import load_scenario

    data = json.loads(json.dumps(load_scenario("cayley").raw))
    data["rank_hints"] = [{"target_term": 0, "degree": 0, "rank": 0}]
    p = tmp_path / "sabotaged.json"
    p.write_text(json.dumps(data))
    code, doc, _ = run_json(capsys, "koszul", "--scenario", str(p), "--twist", "normal")
    assert code == 1
    assert doc["failures"][0]["kind"] == "indeterminate_chase"
    assert doc["failures"][0]["blocking_positions"] == [[0, 0]]


@pytest.mark.parametrize("name", ["cayley", "vmrt", "theorem1", "adjunction"])
def test_reports_exit_zero(capsys, name):
    code, doc, _ = run_json(capsys, "report", name)
    assert code == 0
    assert doc["result"]["passed"] is True
    assert doc["failures"] == []


def test_report_text_and_json_carry_the_same_numbers(capsys):
    code, doc, _ = run_json(capsys, "report", "cayley")
    assert code == 0
    code2, text, _ = run(capsys, "report", "cayley")
    assert code2 == 0
    for line in doc["result"]["sections"][1]["lines"]:
        if isinstance(line["value"], int):
            assert re.search(rf"\b{line['value']}\b", line["text"])
            assert line["text"] in text


def test_bwb_text_and_json_numbers_agree(capsys):
    _, doc, _ = run_json(capsys, "bwb", "A", "6", "--crossed", "4", "--weight", "1,0,0,0,0,1")
    _, text, _ = run(capsys, "bwb", "A", "6", "--crossed", "4", "--weight", "1,0,0,0,0,1")
    assert f"H^{doc['result']['degree']}" in text
    assert str(doc["result"]["dimension"]) in text


def test_json_documents_echo_the_command(capsys):
    _, doc, _ = run_json(capsys, "lr", "1", "1", "--rows", "2")
    assert doc["command"] == {"name": "lr", "args": {"mu": "1", "nu": "1", "rows": 2}}

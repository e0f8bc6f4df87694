import json
from importlib import resources

import pytest

from mukaiverify import cli, models
from mukaiverify.nets import dump_net

DATA = resources.files("mukaiverify").joinpath("data")
REF = str(DATA / "reference_net.json")
DEGEN = str(DATA / "degenerate_net.json")


def run_json(capsys, *argv):
    code = cli.main([*argv, "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"] == cli.SCHEMA_VERSION
    assert doc["exit_code"] == code
    return code, doc["reports"]


@pytest.mark.parametrize("genus,degree", [(8, 14), (9, 16), (10, 18), (12, 22)])
def test_degree(capsys, genus, degree):
    code, reports = run_json(capsys, "degree", "--genus", str(genus))
    assert code == 0
    assert reports[0]["computed"] == degree and isinstance(reports[0]["computed"], int)


@pytest.mark.parametrize("argv", [
    ["degree", "--genus", "11"],
    ["bbw", "--genus", "7"],
    ["euler", "--genus", "5"],
    ["model", "h0", "--genus", "7"],
    ["net", "check", "/nonexistent/net.json"],
    ["net", "conic", REF, "--sigma", "1,x,0"],
    ["net", "scan", REF, "--k", "5"],
    ["nonsense"],
])
def test_usage_errors_exit_3(capsys, argv):
    assert cli.main(argv) == 3
    assert capsys.readouterr().err


def test_malformed_net_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "Q", "forms": [[[0]]]}')
    assert cli.main(["net", "check", str(bad)]) == 3
    bad.write_text("not json")
    assert cli.main(["net", "check", str(bad)]) == 3


def test_tables_and_corrupted_hook():
    assert cli.exit_code(cli.cmd_tables()) == 0
    rows = models.model_table()
    broken = [r if r.genus != 10 else models.MukaiModel(10, r.name, r.r, r.s, r.n, r.N + 1, r.e0) for r in rows]
    reports = cli.cmd_tables(broken)
    assert cli.exit_code(reports) == 1
    bad = [r for r in reports if r.status == "FAILED"]
    assert len(bad) == 1 and bad[0].check == "table g=10"
    assert bad[0].expected != bad[0].computed


@pytest.mark.parametrize("genus", [8, 9, 10, 12])
def test_bbw_and_model(capsys, genus):
    code, reports = run_json(capsys, "bbw", "--genus", str(genus))
    assert code == 0 and all(r["status"] == "VERIFIED" for r in reports)
    code, reports = run_json(capsys, "model", "h0", "--genus", str(genus))
    assert code == 0 and reports[0]["computed"] == (15 if genus == 8 else 14)


@pytest.mark.parametrize("genus", [7, 9, 10, 12])
def test_euler(capsys, genus):
    code, reports = run_json(capsys, "euler", "--genus", str(genus))
    assert code == 0
    if genus == 7:
        assert reports[1]["computed"]["U_S"] == 2 and reports[1]["computed"]["chi(Lambda2 U_S)"] == 44
    else:
        assert reports[0]["computed"] == 2
        assert reports[1]["computed"] == {9: 14, 10: 34, 12: 18}[genus]


def test_net_commands(capsys):
    code, reports = run_json(capsys, "net", "check", REF)
    assert code == 0 and reports[0]["payload"]["degree"] == 5
    code, reports = run_json(capsys, "net", "check", DEGEN)
    assert code == 1 and reports[0]["payload"]["point"] == [1, 0, 0]
    code, reports = run_json(capsys, "net", "check", REF, "--nss-bound", "4", "--field", "101")
    assert code == 2 and reports[0]["status"] == "UNDETERMINED"
    code, reports = run_json(capsys, "net", "cubics", REF)
    assert code == 0 and reports[0]["computed"] == 7
    code, reports = run_json(capsys, "net", "conic", REF)
    assert code == 0 and len(reports) == 20
    code, reports = run_json(capsys, "net", "conic", REF, "--sigma", "1/2,0,0")
    assert code == 0 and len(reports) == 1
    code, reports = run_json(capsys, "net", "scan", REF, "--k", "3")
    assert code == 0 and reports[0]["computed"] == 15


def test_conic_on_degenerate_parameter_fails(capsys):
    code, reports = run_json(capsys, "net", "conic", DEGEN, "--sigma", "1,0,0")
    assert code == 1 and reports[0]["computed"] == "degenerate"


def test_field_mismatch(tmp_path):
    path = tmp_path / "n2.json"
    dump_net(models.reference_net().reduce_mod(2), path)
    assert cli.main(["net", "check", str(path), "--field", "3"]) == 3
    assert cli.main(["net", "check", str(path), "--field", "2"]) == 0


def test_section_file(tmp_path, capsys):
    path = tmp_path / "s9.json"
    path.write_text(json.dumps({"n": 6, "k": 2, "coordinates": [1] + [0] * 8 + [1] + [0] * 4 + [1]}))
    code, reports = run_json(capsys, "model", "h0", "--genus", "9", "--section", str(path))
    assert code == 0 and reports[0]["computed"] == 14


@pytest.mark.parametrize("argv", [
    ["degree", "--genus", "9"],
    ["euler", "--genus", "7"],
    ["net", "check", REF],
    ["net", "conic", REF, "--sigma", "1,0,0"],
    ["bbw", "--genus", "12"],
])
def test_text_and_json_agree(capsys, argv):
    cli.main(argv)
    text = capsys.readouterr().out.strip().splitlines()
    cli.main(argv + ["--format", "json"])
    reports = json.loads(capsys.readouterr().out)["reports"]
    assert len(text) == len(reports)
    for line, rep in zip(text, reports):
        assert line.startswith(f"[{rep['status']}] {rep['check']}:")
        assert f"expected {json.dumps(rep['expected'], separators=(',', ':'))}," in line
        assert f"computed {json.dumps(rep['computed'], separators=(',', ':'))}" in line
        for key, value in rep["payload"].items():
            assert f"{key}={json.dumps(value, separators=(',', ':'))}" in line


def test_report_validation():
    with pytest.raises(ValueError):
        cli.Report("x", "MAYBE")
    with pytest.raises(ValueError):
        cli.Report("x", "FAILED")
    assert cli.exit_code([]) == 0

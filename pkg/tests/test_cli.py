import io
import json

import pytest

from steinergut import run_cli


def run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run_cli(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_family_emits_graph6():
    code, out, err = run(["family", "--name", "cycle", "--n", "5", "--emit", "g6"])
    assert code == 0
    assert out == "Dhc\n"


def test_family_emits_edgelist():
    code, out, _ = run(["family", "--name", "path", "--n", "3", "--emit", "edgelist"])
    assert code == 0
    assert out.splitlines() == ["3", "0 1", "1 2"]


def test_family_rejects_odd_matching_order():
    code, _, err = run(["family", "--name", "kn-minus-matching", "--n", "5"])
    assert code == 1
    assert "error:" in err


def test_compute_single_k_json(tmp_path):
    path = write(tmp_path, "g.g6", "Dhc\n")
    code, out, _ = run(["compute", "--graph", path, "--k", "5", "--indices", "sgut"])
    assert code == 0
    recs = json.loads(out)
    assert recs == [{"graph6": "Dhc", "n": 5, "m": 5, "k": 5, "sgut": 128}]


def test_compute_all_k_reports_gut_only_at_two(tmp_path):
    path = write(tmp_path, "g.g6", "Bg\n")
    code, out, _ = run(["compute", "--graph", path])
    assert code == 0
    recs = json.loads(out)
    assert len(recs) == 2
    assert recs[0]["k"] == 2 and recs[0]["gut"] == 6 and recs[0]["sgut"] == 6
    assert recs[1]["k"] == 3 and recs[1]["gut"] is None


def test_compute_csv_leaves_missing_gut_empty(tmp_path):
    path = write(tmp_path, "g.g6", "Bg\n")
    code, out, _ = run(
        ["compute", "--graph", path, "--indices", "sw,gut", "--out", "csv"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph6,n,m,k,sw,gut"
    assert lines[1] == "Bg,3,2,2,4,6"
    assert lines[2] == "Bg,3,2,3,2,"


def test_compute_reads_stdin(monkeypatch):
    code, out, _ = run(
        ["compute", "--graph", "-", "--k", "2", "--indices", "sgut"],
        stdin="Bg\n",
        monkeypatch=monkeypatch,
    )
    assert code == 0
    assert json.loads(out)[0]["sgut"] == 6


def test_compute_edgelist_with_count_line(tmp_path):
    path = write(tmp_path, "g.edges", "# a comment\n4\n0 1\n1 2\n2 3\n")
    code, out, _ = run(
        ["compute", "--graph", path, "--format", "edgelist", "--k", "2", "--indices", "sgut"]
    )
    assert code == 0
    rec = json.loads(out)[0]
    assert rec["n"] == 4 and rec["sgut"] == 19


def test_compute_rejects_malformed_graph6(tmp_path):
    path = write(tmp_path, "g.g6", "Bg\nA_?\n")
    code, _, err = run(["compute", "--graph", path, "--k", "2"])
    assert code == 1
    assert ":2:" in err


def test_compute_rejects_bad_k(tmp_path):
    path = write(tmp_path, "g.g6", "Bg\n")
    code, _, err = run(["compute", "--graph", path, "--k", "7"])
    assert code == 1
    code, _, err = run(["compute", "--graph", path, "--k", "two"])
    assert code == 1


def test_bounds_tight_check_exits_zero(tmp_path):
    path = write(tmp_path, "g.g6", "Dhc\n")
    code, out, _ = run(
        ["bounds", "--graph", path, "--k", "5", "--set", "thm32.1.sum_upper"]
    )
    assert code == 0
    rec = json.loads(out)[0]
    check = rec["checks"][0]
    assert check["bound_value"] == "256"
    assert check["actual"] == 256
    assert check["holds"] and check["tight"]
    assert rec["skipped"] == []


def test_bounds_violation_exits_two(tmp_path):
    path = write(tmp_path, "g.g6", "DBg\n")
    code, out, _ = run(
        ["bounds", "--graph", path, "--k", "5", "--set", "cor41.1.sum_upper"]
    )
    assert code == 2
    check = json.loads(out)[0]["checks"][0]
    assert not check["holds"]
    assert check["actual"] == 320


def test_bounds_reports_skipped_groups(tmp_path):
    path = write(tmp_path, "g.g6", "Bg\n")
    code, out, _ = run(["bounds", "--graph", path, "--k", "2"])
    assert code == 0
    rec = json.loads(out)[0]
    ran = {c["bound_id"].split(".")[0] for c in rec["checks"]}
    assert ran == {"prop21", "lem22"}
    skipped = {s["group"]: s["reason"] for s in rec["skipped"]}
    assert set(skipped) == {"thm32", "cor41", "ps", "amgm"}
    assert skipped["thm32"] == "complement is disconnected"


def test_bounds_decimal_column(tmp_path):
    path = write(tmp_path, "g.g6", "Ch\n")  # the 4-path
    code, out, _ = run(
        ["bounds", "--graph", path, "--k", "3", "--set", "amgm.sum_lower",
         "--decimal", "3", "--out", "csv"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "graph6,n,k,bound_id,case_label,bound_value,decimal,actual,holds,tight"
    fields = lines[1].split(",")
    assert fields[5] == "sqrt(2048)"
    assert fields[6] == "45.254"


def test_bounds_unknown_set_token(tmp_path):
    path = write(tmp_path, "g.g6", "Bg\n")
    code, _, err = run(["bounds", "--graph", path, "--set", "thm99"])
    assert code == 1
    assert "usage error" in err


def test_verify_small_clean_run():
    code, out, err = run(["verify", "--n-max", "4", "--dedup", "--coconnected", "--set", "all"])
    assert code == 0
    doc = json.loads(out)
    assert doc["totals"]["violations"] == 0
    assert doc["totals"]["graphs_scanned"] == 1
    assert [r["spec"]["n"] for r in doc["reports"]] == [2, 3, 4]
    assert "n=4: 1 graphs" in err


def test_verify_reports_violations_with_exit_two(tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(
        ["verify", "--n-max", "5", "--coconnected", "--out", str(out_path)]
    )
    assert code == 2
    assert out == ""
    doc = json.loads(out_path.read_text())
    assert doc["totals"]["violations"] == 2
    viols = doc["reports"][-1]["violations"]
    assert {v["graph6"] for v in viols} == {"DBg", "DLs"}
    assert all(v["bound_id"] == "cor41.1.sum_upper" for v in viols)


def test_verify_is_deterministic_and_job_count_invariant():
    args = ["verify", "--n-max", "4", "--coconnected"]
    code1, out1, _ = run(args)
    code2, out2, _ = run(args)
    assert (code1, out1) == (code2, out2)
    code3, out3, _ = run(args + ["--jobs", "2"])
    assert code3 == code1
    assert out3 == out1


def test_verify_writes_csv(tmp_path):
    csv_path = tmp_path / "checks.csv"
    code, _, _ = run(
        ["verify", "--n-max", "4", "--coconnected", "--out",
         str(tmp_path / "r.json"), "--csv", str(csv_path)]
    )
    assert code == 0
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("n,graph6,k,")
    assert len(lines) == 1 + 48  # one co-connected graph, three k values, 16 checks


def test_verify_k_filter():
    code, out, _ = run(["verify", "--n-max", "5", "--coconnected", "--k", "5"])
    assert code == 2
    doc = json.loads(out)
    assert doc["totals"]["violations"] == 2
    # orders below 5 have no admissible k and scan nothing
    assert doc["reports"][0]["checks_run"] == 0


def test_verify_rejects_out_of_range_k():
    code, _, err = run(["verify", "--n-max", "5", "--k", "9"])
    assert code == 1
    assert "usage error" in err


def test_verify_rejects_dedup_labeled_conflict():
    code, _, err = run(["verify", "--n-max", "3", "--dedup", "--labeled"])
    assert code == 1


def test_audit_formulas_cli():
    code, out, _ = run(["audit-formulas", "--n-max", "5"])
    assert code == 2
    lines = out.strip().splitlines()
    assert "complete n=3 k=2: printed 24 != computed 12" in lines
    assert "path n=4 k=3: printed 16 != computed 28" in lines
    assert lines[-1] == "30 comparisons, 16 disagreements"


def test_extremal_cli():
    code, out, _ = run(["extremal", "--n", "5", "--k", "3", "--objective", "max-sgut"])
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 1280
    assert doc["objective"] == "max-sgut"
    assert len(doc["graph6s"]) == 1


def test_usage_errors_exit_one(tmp_path):
    for argv in (
        ["frobnicate"],
        ["compute"],
        ["compute", "--graph", str(tmp_path / "missing.g6")],
        ["compute", "--graph", "x", "--out", "yaml"],
        ["family", "--name", "hypercube", "--n", "4"],
        ["extremal", "--n", "5", "--k", "3", "--objective", "max-girth"],
    ):
        code, _, err = run(argv)
        assert code == 1, argv
        assert err


def test_indices_validation(tmp_path):
    path = write(tmp_path, "g.g6", "Bg\n")
    code, _, err = run(["compute", "--graph", path, "--indices", "sgut,wiener"])
    assert code == 1
    assert "unknown index" in err


def test_help_exits_zero():
    code, _, _ = run(["--help"])
    assert code == 0

import json

import pytest

from steinerdiam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_metrics_triangle(capsys):
    code, out, _ = run(capsys, "metrics", "Bw", "3")
    assert code == 0
    blob = json.loads(out)
    assert blob["n"] == 3 and blob["k"] == 3
    assert blob["sdiam"] == 2 and blob["srad"] == 2
    assert blob["ecc"] == [2, 2, 2]


def test_metrics_cycle7_witness(capsys):
    code, out, _ = run(capsys, "metrics", "FhCKG", "3", "--witness")
    assert code == 0
    blob = json.loads(out)
    assert blob["sdiam"] == 4
    w = blob["witness"]
    assert len(w["terminals"]) == 3 and len(w["edges"]) == 4


def test_metrics_disconnected_inf(capsys):
    code, out, _ = run(capsys, "metrics", "A?", "2")
    assert code == 0
    blob = json.loads(out)
    assert blob["sdiam"] == "Infinite"


def test_metrics_bad_k(capsys):
    code, _, err = run(capsys, "metrics", "Bw", "9")
    assert code == 3 and "error:" in err
    code, _, err = run(capsys, "metrics", "Bw", "1")
    assert code == 3


def test_metrics_bad_graph6(capsys):
    code, _, err = run(capsys, "metrics", "B", "2")
    assert code == 2 and "error:" in err


def test_metrics_at_file(capsys, tmp_path):
    p = tmp_path / "one.g6"
    p.write_text("Bw\n")
    code, out, _ = run(capsys, "metrics", f"@{p}", "2")
    assert code == 0 and json.loads(out)["sdiam"] == 1
    p.write_text("Bw\nBg\n")
    code, _, err = run(capsys, "metrics", f"@{p}", "2")
    assert code == 2 and "verify --corpus" in err
    code, _, err = run(capsys, "metrics", "@/nonexistent/file.g6", "2")
    assert code == 4


def test_classify_cycles(capsys):
    code, out, _ = run(capsys, "classify", "Dhc")  # C5 as graph6
    assert code == 0
    assert "class: THREE" in out
    code, out, _ = run(capsys, "classify", "Cl")  # C4
    assert code == 0 and "class: TWO" in out
    code, out, _ = run(capsys, "classify", "E???")  # empty on 6: disconnected
    assert code == 3


def test_classify_path_json(capsys):
    code, out, _ = run(capsys, "classify", "EhCG", "--json")  # P6
    assert code == 0
    blob = json.loads(out)
    assert blob["class"] == "n_minus_1"
    assert blob["sdiam3"] == 5
    assert blob["agree"] is True


def test_generate_round_trips(capsys):
    code, out, _ = run(capsys, "generate", "--cycle", "7")
    assert code == 0 and out.strip() == "FhCKG"
    code, out, _ = run(capsys, "generate", "--spider", "0,2,3")
    assert code == 0 and out.strip() == "EkCG"  # a path, laid out as a spider
    code, out, _ = run(capsys, "generate", "--complete", "3")
    assert code == 0 and out.strip() == "Bw"


def test_generate_validation(capsys):
    code, _, err = run(capsys, "generate", "--cycle", "2")
    assert code == 2
    code, _, err = run(capsys, "generate", "--spider", "3,2,1")
    assert code == 2
    code, _, err = run(capsys, "generate", "--spider", "a,b,c")
    assert code == 2
    # exactly one family flag
    code, _, err = run(capsys, "generate")
    assert code == 2
    code, _, err = run(capsys, "generate", "--cycle", "5", "--complete", "4")
    assert code == 2


def test_verify_clean_and_files(capsys, tmp_path):
    out_prefix = tmp_path / "rep"
    code, out, _ = run(capsys, "verify", "--claims", "th2,pro1",
                       "--corpus", "labeled:4", "--out", str(out_prefix))
    assert code == 0
    assert (tmp_path / "rep.json").exists()
    assert (tmp_path / "rep.csv").exists()
    blob = json.loads((tmp_path / "rep.json").read_text())
    assert [r["claim_id"] for r in blob] == ["th2", "pro1"]
    assert all(r["violations_total"] == 0 for r in blob)


def test_verify_json_mode(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "all",
                       "--corpus", "labeled:3", "--json")
    assert code == 0
    blob = json.loads(out)
    assert len(blob) == 21


def test_verify_bad_inputs(capsys):
    code, _, err = run(capsys, "verify", "--claims", "nope",
                       "--corpus", "labeled:4")
    assert code == 2
    code, _, err = run(capsys, "verify", "--claims", "th2",
                       "--corpus", "labeled:99")
    assert code == 3
    code, _, err = run(capsys, "verify", "--claims", "th2",
                       "--corpus", "file:/nonexistent.g6")
    assert code == 4


def test_oracle_diff_clean(capsys):
    code, out, _ = run(capsys, "oracle-diff", "Dhc", "3")
    assert code == 0
    assert "0 discrepancies" in out
    code, out, _ = run(capsys, "oracle-diff", "Dhc", "4", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["count"] == 0 and blob["discrepancies"] == []


def test_oracle_diff_capacity(capsys):
    big = "Q" + "?" * 26  # empty graph on 18 vertices, over the table limit
    code, _, err = run(capsys, "oracle-diff", big, "3")
    assert code == 3


def test_version_and_usage(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "steinerdiam" in capsys.readouterr().out
    with pytest.raises(SystemExit) as exc:
        main(["metrics"])  # missing args -> argparse exits 2
    assert exc.value.code == 2

import csv
import io
import json

import pytest

from domination.__main__ import main
from domination.handlers import EXIT_BUDGET, EXIT_OK, EXIT_USAGE
from domination.reports import REPORT_COLUMNS


def _csv_rows(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------

def test_gen_cycle_to_file(tmp_path, capsys):
    out = tmp_path / "c8.el"
    assert main(["gen", "--family", "cycle", "--n", "8", "--out", str(out)]) == EXIT_OK
    assert out.read_text().splitlines()[0] == "8 8"
    assert "n=8 m=8" in capsys.readouterr().out


def test_gen_double_star_to_stdout(capsys):
    assert main(["gen", "--family", "double_star", "--n", "3", "--m", "2"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "7 6"


def test_gen_invalid_family_parameters():
    assert main(["gen", "--family", "path", "--n", "0"]) == EXIT_USAGE


def test_gen_middle_graph_json(capsys):
    assert main(["gen", "--family", "path", "--n", "2", "--transform", "middle", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 3 and data["provenance"][2] == {"kind": "sub", "i": 0, "j": 1}


def test_gen_random_tree(capsys):
    assert main(["gen", "--random", "tree", "--n", "8", "--seed", "42"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "8 7"


def test_gen_needs_exactly_one_source():
    assert main(["gen", "--n", "4"]) == EXIT_USAGE


def test_join_needs_a_second_graph():
    assert main(["gen", "--family", "path", "--n", "3", "--transform", "join"]) == EXIT_USAGE


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _compute_json(capsys, *args: str) -> dict:
    assert main(["compute", *args, "--format", "json"]) == EXIT_OK
    return json.loads(capsys.readouterr().out)


def test_compute_middle_cycle(capsys):
    result = _compute_json(capsys, "--family", "cycle", "--n", "8", "--transform", "middle", "--kind", "pdd")
    assert result["value"] == 4
    assert result["status"] == "optimal"
    assert result["millis"] is None


def test_compute_middle_complete_bipartite(capsys):
    result = _compute_json(
        capsys, "--family", "complete_bipartite", "--n", "2", "--m", "3", "--transform", "middle", "--kind", "pdd",
    )
    assert result["value"] == 2


def test_compute_from_file(tmp_path, capsys):
    path = tmp_path / "c8.el"
    assert main(["gen", "--family", "cycle", "--n", "8", "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    assert _compute_json(capsys, "--input", str(path), "--kind", "pdd")["value"] == 4


def test_compute_restricted_to_subdivisions(capsys):
    result = _compute_json(capsys, "--family", "cycle", "--n", "8", "--transform", "middle", "--restrict", "subdivision")
    assert result["value"] == 4
    assert all(v >= 8 for v in result["witness"])


def test_compute_infeasible_restriction_exits_zero(capsys):
    result = _compute_json(capsys, "--family", "path", "--n", "5", "--transform", "middle", "--restrict", "original")
    assert result["status"] == "infeasible"
    assert result["value"] is None


def test_compute_join(tmp_path, capsys):
    second = tmp_path / "c4.el"
    second.write_text("4 4\n0 1\n1 2\n2 3\n0 3")
    result = _compute_json(
        capsys, "--family", "path", "--n", "2", "--transform", "join", "--second", str(second), "--kind", "dom",
    )
    assert result["value"] == 1


def test_compute_rejects_isolated_vertices(tmp_path):
    path = tmp_path / "iso.el"
    path.write_text("3 1\n0 1")
    assert main(["compute", "--input", str(path)]) == EXIT_USAGE


def test_compute_rejects_malformed_input(tmp_path):
    path = tmp_path / "bad.el"
    path.write_text("3 2\n0 1\n1 1")
    assert main(["compute", "--input", str(path)]) == EXIT_USAGE


def test_compute_missing_file(tmp_path):
    assert main(["compute", "--input", str(tmp_path / "missing.el")]) == EXIT_USAGE


def test_compute_budget_exceeded(capsys):
    code = main(
        ["compute", "--family", "cycle", "--n", "12", "--transform", "middle", "--node-budget", "5", "--format", "json"]
    )
    assert code == EXIT_BUDGET
    assert json.loads(capsys.readouterr().out)["status"] == "budget_exceeded"


def test_compute_text_output(capsys):
    assert main(["compute", "--family", "path", "--n", "2", "--kind", "pr"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "gamma_pr: 2 (optimal)" in out
    assert "witness: 0 1" in out


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_middle_paths(capsys):
    assert main(["verify", "--suite", "T45", "--max-n", "13", "--format", "csv"]) == EXIT_OK
    text = capsys.readouterr().out
    assert text.splitlines()[0] == ",".join(REPORT_COLUMNS)
    rows = _csv_rows(text)
    assert len(rows) == 12
    assert {r["verdict"] for r in rows} == {"Match"}
    assert {r["millis"] for r in rows} == {""}


def test_verify_unknown_suite():
    assert main(["verify", "--suite", "T99"]) == EXIT_USAGE


def test_verify_reports_are_byte_identical(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (first, second):
        assert main(["verify", "--suite", "L51", "--samples", "3", "--seed", "1", "--out", str(out)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert len(_csv_rows(first.read_text())) == 3


def test_verify_json(capsys):
    assert main(["verify", "--suite", "T47", "--format", "json", "--timings"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 6
    assert all(r["solver_values"] == [4] and r["verdict"] == "Match" for r in rows)
    assert all(isinstance(r["millis"], int) for r in rows)


def test_verify_text_table(capsys):
    assert main(["verify", "--suite", "T44", "--max-n", "6", "--format", "text"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "M(C_6)" in out
    assert "4 rows: 4 Match" in out


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def test_sweep_without_instances_prints_header_only(capsys):
    assert main(["sweep", "--trees", "0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines() == [out.splitlines()[0]]
    assert out.startswith("instance,n,m,gamma_d")


@pytest.mark.parametrize("flag", ["--trees", "--graphs"])
def test_sweep_rows(flag, capsys):
    assert main(["sweep", flag, "3", "--n-min", "5", "--n-max", "7", "--seed", "9"]) == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)
    assert len(rows) == 3
    for row in rows:
        assert row["o31"] == row["o32"] == row["t35"] == "Match"
        assert int(row["gamma_prd"]) <= int(row["path_bound"])


def test_sweep_rejects_inverted_order_range():
    assert main(["sweep", "--trees", "1", "--n-min", "8", "--n-max", "5"]) == EXIT_USAGE


@pytest.mark.parametrize("suite", ["T41", "L52"])
def test_verify_csv_verdict_cells_are_bare(suite, capsys):
    main(["verify", "--suite", suite, "--samples", "3", "--seed", "1", "--format", "csv"])
    rows = _csv_rows(capsys.readouterr().out)
    assert rows
    assert {r["verdict"] for r in rows} <= {"Match", "Mismatch", "NotApplicable", "Diagnostic"}


def test_restrict_help_documents_infeasible_exit(capsys):
    with pytest.raises(SystemExit):
        main(["compute", "--help"])
    assert "infeasible" in capsys.readouterr().out

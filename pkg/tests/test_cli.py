import json
import os
import shutil
from pathlib import Path

import pytest

from conftest import fixture_path
from gangulate.cli import main

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("GANGULATE_UPDATE_GOLDEN") == "1"

INPUTS = {
    "empty63.txt": "6 3\n",
    "empty64.txt": "6 4\n",
    "empty84.txt": "8 4\n",
}


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    for name in ("fig1a.txt", "fig1b.txt", "fig2a.txt", "q3.txt"):
        shutil.copy(fixture_path(name), tmp_path / name)
    for name, text in INPUTS.items():
        (tmp_path / name).write_text(text)
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("GANGULATE_MAX_N", raising=False)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), out


def check_golden(name, text):
    path = GOLDEN / name
    if UPDATE:
        path.write_text(text)
    assert path.read_text() == text


GOLDEN_CASES = [
    ("decide_fig1a.json", ["decide", "fig1a.txt"], 3),
    ("decide_empty84.json", ["decide", "empty84.txt"], 0),
    ("count_empty63.json", ["count", "empty63.txt"], 0),
    ("count_fig1b.json", ["count", "fig1b.txt"], 0),
    ("classify_fig2a.json", ["classify", "fig2a.txt"], 3),
    ("construct_empty84.json", ["construct", "empty84.txt"], 0),
    ("place_cycle_6_4.json", ["place", "cycle", "--n", "6", "--g", "4"], 0),
    ("place_petersen_7_3.json", ["place", "petersen", "--n", "7", "--k", "3", "--g", "4"], 0),
    ("place_cubic_q3.json", ["place", "cubic", "--graph", "q3.txt"], 0),
    ("census_6_4.json", ["census", "--n", "6", "--g", "4"], 0),
]


@pytest.mark.parametrize("name,argv,code", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_reports(workdir, capsys, name, argv, code):
    got, _, out = run_json(capsys, *argv)
    assert got == code
    check_golden(name, out)


def test_golden_svg(workdir, capsys):
    assert main(["render", "fig1a.txt", "-o", "fig1a.svg"]) == 0
    capsys.readouterr()
    check_golden("render_fig1a.svg", (workdir / "fig1a.svg").read_text())


def test_decide_reports(workdir, capsys):
    code, rep, _ = run_json(capsys, "decide", "fig1a.txt")
    assert (code, rep["verdict"], rep["class"]) == (3, "Blocked", "FStar")
    code, rep, _ = run_json(capsys, "decide", "empty84.txt")
    assert code == 0 and rep["verdict"] == "Angulable"
    assert len(rep["witness"]["diagonals"]) == 2


def test_counts_are_strings(workdir, capsys):
    assert run_json(capsys, "count", "empty63.txt")[1]["count"] == "14"
    assert run_json(capsys, "count", "empty64.txt")[1]["count"] == "3"
    assert run_json(capsys, "count", "fig1b.txt")[1]["count"] == "0"


def test_count_with_witness(workdir, capsys):
    _, rep, _ = run_json(capsys, "count", "empty64.txt", "--witness")
    assert rep["witness"]["n"] == 6


def test_g_override(workdir, capsys):
    _, rep, _ = run_json(capsys, "count", "empty64.txt", "--g-override", "3")
    assert rep["count"] == "14" and rep["instance"]["g"] == 3


def test_missing_file(workdir, capsys):
    code, out, err = run(capsys, "decide", "missing.txt")
    assert code == 2 and out == "" and "missing.txt" in err


def test_parse_error_exit(workdir, capsys):
    (workdir / "bad.txt").write_text("6 4\n0 9\n")
    code, _, err = run(capsys, "decide", "bad.txt")
    assert code == 2 and "line 2" in err


def test_render_zero_vertices_is_usage_error(workdir, capsys):
    (workdir / "zero.txt").write_text("0 4\n")
    assert run(capsys, "render", "zero.txt")[0] == 2


def test_inadmissible_is_usage_error(workdir, capsys):
    (workdir / "seven.txt").write_text("7 4\n")
    assert run(capsys, "count", "seven.txt")[0] == 2


def test_precondition_is_usage_error(workdir, capsys):
    assert run(capsys, "construct", "fig1a.txt")[0] == 2


def test_size_cap_flag_and_env(workdir, capsys, monkeypatch):
    assert run(capsys, "count", "empty84.txt", "--max-n", "6")[0] == 4
    monkeypatch.setenv("GANGULATE_MAX_N", "6")
    assert run(capsys, "count", "empty84.txt")[0] == 4
    assert run(capsys, "count", "empty84.txt", "--max-n", "8")[0] == 0
    monkeypatch.setenv("GANGULATE_MAX_N", "lots")
    assert run(capsys, "count", "empty84.txt")[0] == 2


def test_usage_errors(workdir, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert run(capsys, "place", "cycle", "--n", "6")[0] == 2
    assert run(capsys, "place", "two-regular", "--g", "4")[0] == 2
    assert run(capsys, "place", "two-regular", "--g", "4", "--cycles", "3,x")[0] == 2


def test_place_cycle_not_potentially_angulable(workdir, capsys):
    code, rep, _ = run_json(capsys, "place", "cycle", "--n", "4", "--g", "4")
    assert code == 3 and rep["potentially_angulable"] is False


def test_place_reports(workdir, capsys):
    _, rep, _ = run_json(capsys, "place", "cycle", "--n", "6", "--g", "4")
    assert rep["witness"]["diagonals"] == [[2, 5]]
    _, rep, _ = run_json(capsys, "place", "cubic", "--graph", "q3.txt")
    assert rep["labeling"]["kind"] == "Q3Special"
    assert rep["witness"]["diagonals"] == [[0, 5], [1, 4]]
    code, rep, _ = run_json(capsys, "place", "two-regular", "--cycles", "3,5", "--g", "4", "--svg", "p.svg")
    assert code == 0 and (workdir / "p.svg").read_text().startswith("<?xml")


def test_plain_output(workdir, capsys):
    code, out, _ = run(capsys, "decide", "fig1a.txt", "--plain")
    assert code == 3
    assert "verdict: Blocked" in out.splitlines()


def test_timing_is_opt_in(workdir, capsys):
    assert "timing_ms" not in run_json(capsys, "count", "empty64.txt")[1]
    assert "timing_ms" in run_json(capsys, "count", "empty64.txt", "--timing")[1]


def test_render_to_stdout(workdir, capsys):
    code, out, _ = run(capsys, "render", "fig1a.txt", "--witness")
    assert code == 0 and out.startswith("<?xml")


def test_census_random_is_seeded(workdir, capsys):
    a = run(capsys, "census", "--n", "8", "--g", "4", "--sizes", "6-7", "--random", "50", "--seed", "3")[1]
    b = run(capsys, "census", "--n", "8", "--g", "4", "--sizes", "6-7", "--random", "50", "--seed", "3")[1]
    assert a == b and json.loads(a)["census"]["total"] == "50"


def test_census_exhaustive_cap(workdir, capsys):
    assert run(capsys, "census", "--n", "14", "--g", "4")[0] == 4

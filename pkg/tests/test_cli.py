from __future__ import annotations

import json
from pathlib import Path

import pytest

from tdpairs.__main__ import build_parser, main


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch, tmp_path):
    for key in (
        "TDPAIRS_WORKERS",
        "TDPAIRS_RANDOM_SEED",
        "TDPAIRS_RANDOM_SAMPLES",
        "TDPAIRS_RANDOM_BOUND",
        "TDPAIRS_OUTPUT_DIR",
    ):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setenv("TDPAIRS_RANDOM_SAMPLES", "3")
    monkeypatch.chdir(tmp_path)


def _generate(tmp_path: Path, spec: str, *extra: str) -> Path:
    path = tmp_path / f"{spec.replace(':', '_').replace(',', '-').replace('/', 'over')}.json"
    assert main(["gen", spec, "--output", str(path), *extra]) == 0
    return path


def _write(tmp_path: Path, name: str, payload) -> Path:
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_gen_writes_pair_document(tmp_path):
    path = _generate(tmp_path, "1:2")
    document = json.loads(path.read_text(encoding="utf-8"))
    assert document == {
        "dim": 2,
        "A": [["0", "1"], ["1", "0"]],
        "Astar": [["0", "2"], ["1/2", "0"]],
        "provenance": "1:2",
    }


def test_gen_to_stdout(capsys):
    assert main(["gen", "1:3"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["Astar"] == [["0", "3"], ["1/3", "0"]]


@pytest.mark.parametrize("spec", ["1:1", "1:2,1:1/2", "nonsense"])
def test_gen_rejects_bad_specs(spec):
    assert main(["gen", spec]) == 2


def test_verify_accepts_generated_pair(tmp_path, capsys):
    path = _generate(tmp_path, "1:2,1:3")
    capsys.readouterr()
    assert main(["verify", str(path)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] is True
    assert report["algebra_dim"] == 16


def test_verify_unchecked_degenerate_pair(tmp_path, capsys):
    path = _generate(tmp_path, "1:2,1:1/2", "--unchecked")
    capsys.readouterr()
    assert main(["verify", str(path)]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["failing"] == ["iv"]


def test_verify_text_format(tmp_path, capsys):
    path = _generate(tmp_path, "1:2")
    capsys.readouterr()
    assert main(["verify", str(path), "--format", "text"]) == 0
    assert "passed: True" in capsys.readouterr().out


def test_verify_reports_format_errors(tmp_path):
    missing = tmp_path / "missing.json"
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    wrong_size = _write(tmp_path, "wrong.json", {"dim": 3, "A": [["0"]], "Astar": [["0"]]})
    floats = _write(tmp_path, "floats.json", {"dim": 1, "A": [[0.5]], "Astar": [["1"]]})
    for path in (missing, broken, wrong_size, floats):
        assert main(["verify", str(path)]) == 2


def test_verify_irrational_spectrum_is_usage_error(tmp_path):
    path = _write(
        tmp_path,
        "irrational.json",
        {"dim": 2, "A": [["0", "2"], ["1", "0"]], "Astar": [["1", "0"], ["0", "1"]]},
    )
    assert main(["verify", str(path)]) == 2


def test_analyze_default_sections(tmp_path, capsys):
    path = _generate(tmp_path, "1:2")
    capsys.readouterr()
    assert main(["analyze", str(path)]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["krawtchouk"]["is_krawtchouk"] is True
    assert document["shape"]["rho"] == [1, 1]
    assert document["split"]["zeta"] == ["1", "9/2"]
    assert document["drinfeld"]["polynomial"]["text"] == "1 - 9/8 λ"
    assert document["form"]["matrix"] == [["0", "1"], ["1", "0"]]
    assert document["four_isomorphisms"]["passed"] is True
    assert "iso_poly" not in document


def test_analyze_single_section(tmp_path, capsys):
    path = _generate(tmp_path, "1:2")
    capsys.readouterr()
    assert main(["analyze", str(path), "--iso-poly"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["iso_poly"]["negate"] == {"I": "-5/3", "A*A": "4/3"}
    assert "shape" not in document


def test_analyze_rejects_non_td_pair(tmp_path):
    path = _generate(tmp_path, "1:2,1:1/2", "--unchecked")
    assert main(["analyze", str(path)]) == 1


def test_iso_command(tmp_path, capsys):
    first = _generate(tmp_path, "1:2")
    second = _generate(tmp_path, "1:1/2")
    third = _generate(tmp_path, "1:3")
    capsys.readouterr()

    assert main(["iso", str(first), str(second)]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["isomorphic"] is True
    assert document["certificate"]["gamma"] == [["0", "1"], ["1", "0"]]
    assert document["certificate_checked"] is True

    assert main(["iso", str(first), str(third)]) == 1
    assert json.loads(capsys.readouterr().out)["isomorphic"] is False


def test_conjectures_command(tmp_path, capsys):
    path = _generate(tmp_path, "1:2,1:3")
    capsys.readouterr()
    assert main(["conjectures", str(path)]) == 0
    reports = json.loads(capsys.readouterr().out)["reports"]
    assert {report["verdict"] for report in reports} == {"holds"}


def test_corpus_command(tmp_path):
    spec_list = tmp_path / "specs.txt"
    spec_list.write_text("# smallest instances\n1:2\n\n1:1/2  # inverse parameter\n1:3\n", encoding="utf-8")
    output = tmp_path / "reports" / "corpus.json"
    assert main(["corpus", str(spec_list), "--no-progress", "--output", str(output)]) == 0
    report = json.loads(output.read_text(encoding="utf-8"))
    assert report["summary"]["instances"] == 3
    assert report["summary"]["hard_failures"] == 0
    assert [item["spec"] for item in report["instances"]] == ["1:2", "1:1/2", "1:3"]
    assert all(entry["consistent"] for entry in report["drinfeld_injectivity"])


def test_corpus_reports_hard_failures(tmp_path):
    spec_list = tmp_path / "specs.txt"
    spec_list.write_text("1:2\n1:1\n", encoding="utf-8")
    output = tmp_path / "corpus.json"
    assert main(["corpus", str(spec_list), "--no-progress", "--output", str(output)]) == 1
    report = json.loads(output.read_text(encoding="utf-8"))
    assert report["summary"]["hard_failures"] == 1


def test_corpus_rejects_bad_worker_count(tmp_path):
    spec_list = tmp_path / "specs.txt"
    spec_list.write_text("1:2\n", encoding="utf-8")
    assert main(["corpus", str(spec_list), "--workers", "0", "--no-progress"]) == 2
    assert main(["corpus", str(tmp_path / "absent.txt"), "--no-progress"]) == 2


def test_corpus_save_uses_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("TDPAIRS_OUTPUT_DIR", str(tmp_path / "out"))
    spec_list = tmp_path / "smallest.txt"
    spec_list.write_text("1:2\n", encoding="utf-8")
    assert main(["corpus", str(spec_list), "--save", "--no-progress"]) == 0
    saved = tmp_path / "out" / "smallest_corpus.json"
    assert json.loads(saved.read_text(encoding="utf-8"))["summary"]["passed"] is True

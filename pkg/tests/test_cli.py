import json
import subprocess
import sys

import pytest

from isorealize.cli import BUDGET_ENV, main


def write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


C3 = {"cayley": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]}


def discrete(n):
    return {"labels": [f"p{i}" for i in range(n)],
            "d": [["0" if i == j else "1" for j in range(n)] for i in range(n)]}


@pytest.fixture
def c3_artifacts(tmp_path):
    group = write(tmp_path / "c3.json", C3)
    out = tmp_path / "K.json"
    report = tmp_path / "report.json"
    code = main(["realize", "--group", group, "--metric", "discrete", "--pipeline", "compact",
                 "--out", str(out), "--report", str(report)])
    return code, group, out, tmp_path / "K.provenance.json", report


class TestRealize:
    def test_c3(self, c3_artifacts):
        code, _, out, prov, report = c3_artifacts
        assert code == 0
        data = json.loads(report.read_text())
        assert data["group_order"] == 3 and data["iso_order_of_K"] == 3
        assert len(json.loads(prov.read_text())) == len(json.loads(out.read_text())["labels"])

    def test_trivial_group_to_stdout(self, tmp_path, capsys):
        group = write(tmp_path / "c1.json", {"cayley": [[0]]})
        assert main(["realize", "--group", group]) == 0
        K = json.loads(capsys.readouterr().out)
        assert K == {"labels": ["g0"], "d": [["0"]]}

    @pytest.mark.parametrize("content", ["{not json", '{"cayley": [[0, 1], [0, 0]]}', '{"cayley": [[0]], "generators": []}'])
    def test_malformed(self, tmp_path, capsys, content):
        path = tmp_path / "bad.json"
        path.write_text(content)
        assert main(["realize", "--group", str(path)]) == 2
        assert "error" in capsys.readouterr().err

    def test_metric_file_and_word(self, tmp_path):
        group = write(tmp_path / "c4.json", {"generators": [[1, 2, 3, 0]]})
        cyc = {"labels": list("abcd"), "d": [[str(min((i - j) % 4, (j - i) % 4)) for j in range(4)] for i in range(4)]}
        metric = write(tmp_path / "cyc.json", cyc)
        assert main(["realize", "--group", group, "--metric", f"file:{metric}", "--out", str(tmp_path / "a.json")]) == 0
        assert main(["realize", "--group", group, "--metric", "word:1,3", "--out", str(tmp_path / "b.json")]) == 0
        assert (tmp_path / "a.json").read_text() == (tmp_path / "b.json").read_text()

    def test_deterministic(self, tmp_path):
        group = write(tmp_path / "g.json", {"generators": [[1, 0, 2], [1, 2, 0]]})
        for name in ("one", "two"):
            assert main(["realize", "--group", group, "--pipeline", "polish", "--out", str(tmp_path / f"{name}.json"),
                         "--report", str(tmp_path / f"{name}.report.json")]) == 0
        for suffix in (".json", ".provenance.json", ".report.json"):
            assert (tmp_path / f"one{suffix}").read_bytes() == (tmp_path / f"two{suffix}").read_bytes()

    def test_no_floats_in_artifacts(self, c3_artifacts):
        _, _, out, prov, report = c3_artifacts
        for path in (out, prov, report):
            text = path.read_text()
            assert not any(isinstance(v, float) for v in _leaves(json.loads(text)))


def _leaves(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _leaves(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _leaves(v)
    else:
        yield obj


class TestIso:
    def test_discrete(self, tmp_path, capsys):
        space = write(tmp_path / "s.json", discrete(3))
        assert main(["iso", "--space", space]) == 0
        assert len(json.loads(capsys.readouterr().out)["elements"]) == 6

    def test_rigid(self, tmp_path, capsys):
        rigid = {"labels": ["a", "b", "c"], "d": [["0", "1", "1/2"], ["1", "0", "3/4"], ["1/2", "3/4", "0"]]}
        out = tmp_path / "iso.json"
        assert main(["iso", "--space", write(tmp_path / "s.json", rigid), "--naive", "--out", str(out)]) == 0
        assert json.loads(out.read_text()) == {"n": 3, "elements": [[0, 1, 2]]}

    def test_non_metric_rejected(self, tmp_path, capsys):
        # sides 1/4, 1/2, 1 break the triangle inequality
        bad = {"labels": ["a", "b", "c"], "d": [["0", "1/4", "1/2"], ["1/4", "0", "1"], ["1/2", "1", "0"]]}
        assert main(["iso", "--space", write(tmp_path / "s.json", bad)]) == 2
        assert "TriangleViolation" in capsys.readouterr().err

    def test_naive_cap(self, tmp_path, capsys):
        assert main(["iso", "--space", write(tmp_path / "s.json", discrete(9)), "--naive"]) == 2
        assert "TooLargeForOracle" in capsys.readouterr().err

    def test_budget(self, tmp_path, monkeypatch):
        space = write(tmp_path / "s.json", discrete(5))
        assert main(["iso", "--space", space, "--node-budget", "10"]) == 3
        monkeypatch.setenv(BUDGET_ENV, "10")
        assert main(["iso", "--space", space]) == 3
        monkeypatch.setenv(BUDGET_ENV, "1000000")
        assert main(["iso", "--space", space, "--node-budget", "10"]) == 0


class TestVerify:
    def test_round_trip(self, c3_artifacts, tmp_path):
        _, group, out, prov, _ = c3_artifacts
        report = tmp_path / "verify.json"
        assert main(["verify", "--space", str(out), "--group", group, "--provenance", str(prov),
                     "--report", str(report)]) == 0
        data = json.loads(report.read_text())
        assert data["realized"] and data["lemma1_verified"] is None

    def test_orbit_point_removed(self, c3_artifacts, tmp_path):
        _, group, out, prov, _ = c3_artifacts
        K = json.loads(out.read_text())
        records = json.loads(prov.read_text())
        victim = next(i for i, rec in enumerate(records) if rec["kind"] == "orbit")
        K["labels"].pop(victim)
        K["d"] = [row[:victim] + row[victim + 1:] for i, row in enumerate(K["d"]) if i != victim]
        records.pop(victim)
        assert main(["verify", "--space", write(tmp_path / "K2.json", K), "--group", group,
                     "--provenance", write(tmp_path / "p2.json", records)]) == 1

    def test_provenance_names_missing_point(self, c3_artifacts, tmp_path):
        _, group, out, prov, _ = c3_artifacts
        records = json.loads(prov.read_text())
        records.append({"label": "ghost", "kind": "orbit", "group_element": 0, "neighborhood": 1})
        assert main(["verify", "--space", str(out), "--group", group,
                     "--provenance", write(tmp_path / "p2.json", records)]) == 2


def test_module_entry_point(tmp_path):
    space = write(tmp_path / "s.json", discrete(2))
    proc = subprocess.run([sys.executable, "-m", "isorealize.cli", "iso", "--space", space],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["elements"] == [[0, 1], [1, 0]]


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2

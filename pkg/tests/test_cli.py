import json

import pytest

from rectcrys import cli
from rectcrys.verify import VerifyReport


def run_cli(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out.strip()
    return code, out


def write_json(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture()
def golden_files(tmp_path, golden):
    element = {"rects": golden["rects"], "factors": golden["b"]}
    return {
        "element": write_json(tmp_path, "b.json", element),
        "pair": write_json(
            tmp_path,
            "pair.json",
            {"rects": golden["rects"], "p": golden["p"], "q": golden["q"]},
        ),
    }


class TestRoundTrips:
    def test_kostka_example(self, capsys):
        code, out = run_cli(
            capsys, ["kpoly", "kostka", "--lambda", "2,1", "--mu", "1,1,1", "--no-cache"]
        )
        assert code == 0
        assert json.loads(out) == {"coeffs": {"1": 1, "2": 1}}

    def test_affine_e0_golden(self, capsys, golden, golden_files):
        code, out = run_cli(
            capsys, ["--infile", golden_files["element"], "affine", "e0"]
        )
        assert code == 0
        assert json.loads(out)["factors"] == golden["e0_b"]

    def test_rsk_pair_and_inverse(self, capsys, golden, golden_files, tmp_path):
        code, out = run_cli(capsys, ["--infile", golden_files["element"], "rsk", "pair"])
        assert code == 0
        pair = json.loads(out)
        assert pair["p"] == golden["p"] and pair["q"] == golden["q"]
        code, out = run_cli(capsys, ["--infile", golden_files["pair"], "rsk", "inverse"])
        assert code == 0
        assert json.loads(out)["factors"] == golden["b"]

    def test_crystal_op(self, capsys, tmp_path):
        element = {
            "rects": [[1, 1], [1, 1]],
            "factors": [
                {"inner": [], "outer": [1], "rows": [[1]]},
                {"inner": [], "outer": [1], "rows": [[1]]},
            ],
        }
        path = write_json(tmp_path, "el.json", element)
        code, out = run_cli(
            capsys, ["--infile", path, "crystal", "f", "--color", "1"]
        )
        assert code == 0
        assert json.loads(out)["factors"][0]["rows"] == [[2]]
        code, out = run_cli(
            capsys, ["--infile", path, "crystal", "e", "--color", "1"]
        )
        assert code == 0
        assert json.loads(out) is None

    def test_rmatrix_swap(self, capsys, golden, golden_files):
        code, out = run_cli(
            capsys, ["--infile", golden_files["element"], "rmatrix", "swap", "--pos", "2"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["rects"] == golden["tau2_rects"]
        assert data["factors"] == golden["tau2_b"]

    def test_energy_total(self, capsys, golden_files):
        code, out = run_cli(
            capsys, ["--infile", golden_files["element"], "energy", "total"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["energy"] == 3
        assert [t[2] for t in data["terms"]] == [1, 2, 0]

    def test_demazure_char(self, capsys):
        code, out = run_cli(
            capsys, ["demazure", "char", "--n", "2", "--level", "1", "--mu", "1,1"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["terms"] == [
            {"shape": [1, 1], "coeffs": {"0": 1}},
            {"shape": [2], "coeffs": {"1": 1}},
        ]

    def test_lrt_streaming(self, capsys):
        code, out = run_cli(
            capsys, ["rsk", "lrt", "--shape", "2,1", "--rects", "1x1,1x1,1x1"]
        )
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert all(json.loads(line)["outer"] == [2, 1] for line in lines)

    def test_affine_trace(self, capsys, golden, golden_files):
        code, out = run_cli(
            capsys, ["--infile", golden_files["element"], "affine", "trace"]
        )
        assert code == 0
        data = json.loads(out)
        assert data["trace"]["removed_strip"] == golden["removed_strip"]
        assert data["trace"]["ejected"] == golden["ejected"]
        assert data["q"] == golden["q_pr"]

    def test_energy_local(self, capsys, golden_files):
        code, out = run_cli(
            capsys,
            ["--infile", golden_files["element"], "energy", "local", "--pos", "1"],
        )
        assert code == 0
        assert json.loads(out)["energy"] == 1

    def test_kpoly_character(self, capsys):
        code, out = run_cli(
            capsys, ["kpoly", "character", "--rects", "1x2,1x1,1x1", "--no-cache"]
        )
        assert code == 0
        terms = json.loads(out)["terms"]
        assert {tuple(t["shape"]): t["coeffs"] for t in terms} == {
            (2, 1, 1): {"0": 1},
            (2, 2): {"1": 1},
            (3, 1): {"1": 1, "2": 1},
            (4,): {"3": 1},
        }

    def test_tableau_ops(self, capsys, tmp_path):
        path = write_json(tmp_path, "w.json", {"word": [2, 1, 1]})
        code, out = run_cli(capsys, ["--infile", path, "tableau", "insert"])
        assert code == 0
        assert json.loads(out)["rows"] == [[1, 1], [2]]
        code, out = run_cli(capsys, ["tableau", "key", "--gamma", "0,3,3"])
        assert json.loads(out)["rows"] == [[2, 2, 2], [3, 3, 3]]


class TestCache:
    def args(self, tmp_path, extra=()):
        return [
            "kpoly",
            "compute",
            "--shape",
            "2,1",
            "--rects",
            "1x1,1x1,1x1",
            "--cache-dir",
            str(tmp_path),
            *extra,
        ]

    def test_cold_then_warm(self, capsys, tmp_path):
        code, cold = run_cli(capsys, self.args(tmp_path))
        assert code == 0
        assert (tmp_path / "kpoly.json").exists()
        code, warm = run_cli(capsys, self.args(tmp_path))
        assert warm == cold

    def test_disabled_identical(self, capsys, tmp_path):
        _, cached = run_cli(capsys, self.args(tmp_path))
        _, plain = run_cli(capsys, self.args(tmp_path, ("--no-cache",)))
        assert cached == plain

    def test_corrupt_entries_recomputed(self, capsys, tmp_path):
        _, first = run_cli(capsys, self.args(tmp_path))
        store = json.loads((tmp_path / "kpoly.json").read_text())
        for k in store["entries"]:
            store["entries"][k] = {"bogus": 1}
        (tmp_path / "kpoly.json").write_text(json.dumps(store))
        _, again = run_cli(capsys, self.args(tmp_path))
        assert again == first

    def test_schema_bump_invalidates(self, capsys, tmp_path):
        _, first = run_cli(capsys, self.args(tmp_path))
        store = json.loads((tmp_path / "kpoly.json").read_text())
        store["schema"] = -1
        store["entries"] = {k: {"coeffs": {"9": 9}} for k in store["entries"]}
        (tmp_path / "kpoly.json").write_text(json.dumps(store))
        _, again = run_cli(capsys, self.args(tmp_path))
        assert again == first  # stale-schema entries are never served


class TestVerifyCommand:
    def test_small_suite_passes(self, capsys):
        code, out = run_cli(
            capsys, ["verify", "charge-energy", "--n", "3", "--max-cells", "5"]
        )
        assert code == 0
        reports = json.loads(out)
        assert reports[0]["failures"] == []

    def test_main_theorem(self, capsys):
        code, out = run_cli(
            capsys,
            ["verify", "main-theorem", "--n", "2", "--level", "1", "--mu", "1,1"],
        )
        assert code == 0

    def test_failure_exit_code(self, capsys, monkeypatch):
        def fake(n, cells, jobs=1):
            return VerifyReport(
                suite="charge-energy",
                instances=1,
                failures=[{"instance": {}, "expected": 0, "actual": 1}],
            )

        monkeypatch.setitem(cli.verify_mod.SUITES, "charge-energy", fake)
        code, _ = run_cli(
            capsys, ["verify", "charge-energy", "--n", "2", "--max-cells", "2"]
        )
        assert code == 1

    def test_missing_bounds_usage_error(self):
        with pytest.raises(SystemExit) as err:
            cli.main(["verify", "charge-energy", "--n", "3"])
        assert err.value.code == 2

    def test_bad_json_usage_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("not json")
        code = cli.main(["--infile", str(path), "rsk", "pair"])
        assert code == 2

from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from oracles import fibonacci
from seqfp import cli
from seqfp.config import RunConfig

FAST = ["--workers", "1"]


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def staged(tmp_path_factory):
    """An output directory taken through every stage one subcommand at a time."""
    out = str(tmp_path_factory.mktemp("cli") / "run")
    steps = [
        ["ingest", "--out", out],
        ["features", "--out", out, "--random-count", "50"],
        ["ransac", "--out", out, "--iterations", "500"],
        ["make-dataset", "--out", out],
        ["train", "--out", out, "--task", "keywords", "--trees", "10"],
        ["train", "--out", out, "--task", "keywords", "--model", "baseline"],
        ["evaluate", "--out", out, "--task", "keywords"],
        ["evaluate", "--out", out, "--task", "keywords", "--model", "baseline"],
        ["export-figs", "--out", out],
    ]
    logs = [run(s + FAST) for s in steps]
    return out, steps, logs


class TestUsage:
    @pytest.mark.parametrize("argv", [[], ["frobnicate"], ["train", "--task", "colours"],
                                      ["ransac", "--iterations", "many"]])
    def test_usage_errors_exit_1(self, argv):
        code, _, err = run(argv)
        assert code == 1 and err

    def test_help_exit_0(self, capsys):
        assert cli.main(["--help"]) == 0

    def test_bad_config_exit_1(self, tmp_path):
        (tmp_path / "c.json").write_text('{"nonsense": 1}')
        assert run(["show-config", "--config", str(tmp_path / "c.json")])[0] == 1
        assert run(["show-config", "--config", str(tmp_path / "none.json")])[0] == 1
        assert run(["show-config", "--workers", "0"])[0] == 1

    def test_show_config_overrides(self, tmp_path):
        RunConfig(seed=4, ransac_iterations=99).save(tmp_path / "c.json")
        code, out, _ = run(["show-config", "--config", str(tmp_path / "c.json"), "--seed", "9",
                            "--threshold", "0.1"])
        d = json.loads(out)
        assert code == 0
        assert (d["seed"], d["ransac_iterations"], d["ransac_threshold"]) == (9, 99, 0.1)


class TestClassify:
    def test_fibonacci(self, tmp_path):
        text = " ".join(map(str, fibonacci(990)))
        code, out, _ = run(["classify", "--out", str(tmp_path), "--json"], text)
        assert code == 0
        body = json.loads(out)
        assert body["n_terms"] == 990
        assert body["distances"]["kl"] < 0.01
        assert "labels" not in body

    def test_table_and_commas(self, tmp_path):
        code, out, _ = run(["classify", "--out", str(tmp_path)], "1, 2, 3,\n4 5")
        assert code == 0
        lines = dict(l.split("\t") for l in out.strip().splitlines())
        assert lines["n_terms"] == "5"
        assert len(lines) == 1 + 14 + 4

    @pytest.mark.parametrize("text", ["", "1 2 x", "1.5 2"])
    def test_bad_input_exit_2(self, tmp_path, text):
        code, _, err = run(["classify", "--out", str(tmp_path)], text)
        assert code == 2 and err

    def test_missing_model_exit_2(self, tmp_path):
        assert run(["classify", "--model-file", str(tmp_path / "no.json")], "1 2 3")[0] == 2


class TestStages:
    def test_all_succeed(self, staged):
        out, steps, logs = staged
        for step, (code, _, err) in zip(steps, logs):
            assert code == 0, (step, err)

    def test_outputs(self, staged):
        out, _, logs = staged
        assert "slope" in logs[2][1]
        assert "subset accuracy" in logs[6][1]
        assert "fig3.tsv" in logs[8][1]

    def test_classify_with_trained_model(self, staged):
        out, _, _ = staged
        code, stdout, _ = run(["classify", "--out", out, "--json"], " ".join(map(str, range(1, 1200))))
        assert code == 0
        assert isinstance(json.loads(stdout)["labels"], list)

    def test_baseline_model_rejected_for_classify(self, staged):
        out, _, _ = staged
        code, _, err = run(["classify", "--model-file", f"{out}/models/baseline.json"], "1 2 3")
        assert code == 2 and "forest" in err

    def test_stage_out_of_order_exit_2(self, tmp_path):
        code, _, err = run(["features", "--out", str(tmp_path)])
        assert code == 2 and "[features]" in err
        code, _, err = run(["evaluate", "--out", str(tmp_path)])
        assert code == 2 and "[evaluate]" in err

    def test_internal_error_exit_3(self, tmp_path, monkeypatch):
        def boom(cfg):
            raise RuntimeError("kaboom")
        monkeypatch.setattr(cli, "stage_ingest", boom)
        code, _, err = run(["ingest", "--out", str(tmp_path)])
        assert code == 3 and "kaboom" in err


def test_run_subcommand(tmp_path):
    code, out, err = run(["run", "--out", str(tmp_path / "r"), "--trees", "8", "--random-count", "40"])
    assert code == 0, err
    assert "ransac slope" in out and "extra_trees" in out
    cfg = json.loads((tmp_path / "r" / "config.json").read_text())
    assert cfg["trees_extra_trees"] == cfg["trees_binary"] == 8


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "seqfp.cli", "show-config", "--seed", "2"],
                          capture_output=True, text=True, cwd=tmp_path)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["seed"] == 2

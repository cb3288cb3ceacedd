"""Command-line surface: subcommands, exit codes, determinism."""

import json

from monalg.cli import ExperimentConfig, main
from monalg.io import save_algebra
from monalg.algebra import AlgebraSpec


QUICK = ["--points", "50", "--triangles", "10"]


def test_list_builtins(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for name in ("example1", "example2", "example3", "example4", "semisimple:m=K"):
        assert name in out


def test_validate_builtin(capsys):
    assert main(["validate", "--algebra", "example2"]) == 0
    out = capsys.readouterr().out
    assert "nilpotency_index" in out


def test_validate_bad_algebra_file(tmp_path, capsys):
    # associativity violated: hand expansion gives residual 1 at (2, 2, 3)
    bad = AlgebraSpec(5, 1, {(2, 2, 3): 1, (2, 3, 4): 1, (3, 3, 5): 1, (2, 4, 5): 2})
    path = tmp_path / "bad.json"
    save_algebra(bad, path)
    assert main(["validate", "--algebra", str(path)]) == 1
    out = capsys.readouterr().out
    assert "assoc_A1_max_residual    1.000e+00" in out


def test_validate_malformed_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert main(["validate", "--algebra", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_lambda_suite(tmp_path, capsys):
    out_prefix = tmp_path / "report"
    rc = main(
        ["verify", "--algebra", "example1", "--suite", "lambda",
         "--seed", "7", "--out", str(out_prefix)]
    )
    assert rc == 0
    payload = json.loads((tmp_path / "report.json").read_text())
    assert payload["all_passed"] is True
    assert payload["config"]["seed"] == 7
    assert (tmp_path / "report.txt").exists()
    assert (tmp_path / "report.csv").read_text().startswith("check,nodes,delta")


def test_verify_semisimple_all(capsys):
    rc = main(
        ["verify", "--algebra", "semisimple:m=3", "--suite", "all", "--seed", "3"]
        + QUICK
    )
    assert rc == 0


def test_verify_exit_nonzero_on_failure(tmp_path, capsys):
    # associativity failure surfaces through the axioms suite
    bad = AlgebraSpec(5, 1, {(2, 2, 3): 1, (2, 3, 4): 1, (3, 3, 5): 1, (2, 4, 5): 2})
    path = tmp_path / "bad.json"
    save_algebra(bad, path)
    rc = main(
        ["verify", "--algebra", str(path), "--frame", "default", "--suite", "axioms"]
    )
    assert rc == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_verify_unknown_algebra(capsys):
    assert main(["verify", "--algebra", "example9", "--suite", "axioms"]) == 2
    assert "unknown built-in" in capsys.readouterr().err


def test_report_determinism(tmp_path, capsys):
    args = [
        "verify", "--algebra", "example3", "--suite", "oracle,lambda,predicates",
        "--seed", "11",
    ] + QUICK
    first = tmp_path / "first"
    second = tmp_path / "second"
    assert main(args + ["--out", str(first)]) == 0
    assert main(args + ["--out", str(second)]) == 0
    assert (tmp_path / "first.json").read_bytes() == (tmp_path / "second.json").read_bytes()


def test_seed_changes_sampled_reports(tmp_path, capsys):
    base = ["verify", "--algebra", "example1", "--suite", "oracle"] + QUICK
    a = tmp_path / "a"
    b = tmp_path / "b"
    assert main(base + ["--seed", "1", "--out", str(a)]) == 0
    assert main(base + ["--seed", "2", "--out", str(b)]) == 0
    ja = json.loads((tmp_path / "a.json").read_text())
    jb = json.loads((tmp_path / "b.json").read_text())
    residual_a = ja["checks"][0]["residual"]
    residual_b = jb["checks"][0]["residual"]
    assert residual_a != residual_b


def test_config_file_with_flag_override(tmp_path, capsys):
    config = {
        "algebra": "example2",
        "suites": ["lambda"],
        "seed": 5,
    }
    cfg_path = tmp_path / "experiment.json"
    cfg_path.write_text(json.dumps(config))
    rc = main(["verify", "--config", str(cfg_path), "--suite", "axioms"])
    assert rc == 0
    out = capsys.readouterr().out
    # the flag replaced the file's suite list
    assert "axioms/" in out and "lambda/" not in out


def test_config_rejects_unknown_fields(tmp_path, capsys):
    cfg_path = tmp_path / "bad.json"
    cfg_path.write_text(json.dumps({"algebra": "example1", "worker_count": 4}))
    assert main(["verify", "--config", str(cfg_path)]) == 2


def test_lambda_command(capsys):
    assert main(["lambda", "--algebra", "example3"]) == 0
    out = capsys.readouterr().out
    assert "plane-radius-variation" in out


def test_predicates_command(capsys):
    assert main(["predicates", "--algebra", "example4"]) == 0
    out = capsys.readouterr().out
    assert "condition=4" in out


def test_frame_file_flag(tmp_path, capsys):
    from monalg.catalog import builtin_algebra, builtin_frames
    from monalg.io import save_frame

    spec = builtin_algebra("example1")
    path = tmp_path / "frame.json"
    save_frame(builtin_frames(spec)["default"], path)
    rc = main(["verify", "--algebra", "example1", "--frame", str(path),
               "--suite", "lambda"])
    assert rc == 0


def test_experiment_config_defaults():
    config = ExperimentConfig()
    assert config.suites == ["all"]
    assert config.seed == 0 and config.nodes_cap == 2**16


def test_run_experiment_library_level(tmp_path, capsys):
    from monalg.cli import run_experiment

    config = ExperimentConfig(algebra="example1", suites=["lambda"], seed=3,
                              out=str(tmp_path / "exp"))
    assert run_experiment(config) == 0
    assert (tmp_path / "exp.json").exists()

import csv
import io
import json

import pytest

from terrain_search import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_csv(text):
    lines = [l for l in text.splitlines() if not l.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def test_evaluate_first_run(capsys):
    code, out, _ = run(capsys, "evaluate", "--model", "classic", "--strategy", "doubling", "--d", "0.5",
                       "--side", "right", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["ratio"] == 1.0 and rec["found_on_run"] == 1


def test_evaluate_beacon_worst_side(capsys):
    code, out, _ = run(capsys, "evaluate", "--model", "beacon:s=2", "--strategy", "doubling",
                       "--d", "1024.000001", "--side", "worst", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["side"] == "right"
    assert rec["ratio"] == pytest.approx(7, abs=2e-3)


def test_evaluate_tailwind_left(capsys):
    code, out, _ = run(capsys, "evaluate", "--model", "tailwind:s=4", "--strategy", "tailwind-balanced:s=4",
                       "--d", "100", "--side", "left", "--format", "json")
    assert code == 0 and json.loads(out)["ratio"] <= 12.25


def test_evaluate_table_default(capsys):
    code, out, _ = run(capsys, "evaluate", "--d", "3")
    assert code == 0 and "ratio" in out and "found_on_run" in out


def test_sweep_classic_footer(capsys):
    code, out, _ = run(capsys, "sweep", "--d-max", "65536", "--format", "csv")
    footer = out.strip().splitlines()[-1]
    assert code == 0 and footer.startswith("# sup_ratio=")
    sup = float(footer.split()[1].split("=")[1])
    assert sup == pytest.approx(9, rel=1e-2)
    assert list(rows_csv(out)[0]) == ["d", "side", "time", "opt", "ratio"]


def test_sweep_valley_decreasing(capsys):
    code, out, _ = run(capsys, "sweep", "--model", "valley:c=2", "--d-max", "1e6", "--format", "json")
    rows = json.loads(out)["rows"]
    # envelope: worst ratio per decade shrinks toward 5
    worst = [max(r["ratio"] for r in rows if 10 ** k <= r["d"] < 10 ** (k + 1)) for k in range(6)]
    assert all(b < a for a, b in zip(worst, worst[1:])) and worst[-1] > 5


def test_sweep_incline_grows_like_sqrt(capsys):
    code, out, _ = run(capsys, "sweep", "--model", "incline:c=2", "--d-max", "1e6", "--format", "json")
    rows = [r for r in json.loads(out)["rows"] if r["d"] >= 100]
    scaled = [r["ratio"] / r["d"] ** 0.5 for r in rows]
    # sqrt(8c) = 4 plus the constant slack
    assert all(v <= 4 + 10 / r["d"] ** 0.5 for v, r in zip(scaled, rows))
    assert max(scaled) > 1
    assert max(r["ratio"] for r in rows) > 1000


def test_csv_and_json_agree(capsys):
    args = ["sweep", "--model", "history:s=2", "--strategy", "geom:r=1.7", "--d-max", "1000"]
    _, c, _ = run(capsys, *args, "--format", "csv")
    _, j, _ = run(capsys, *args, "--format", "json")
    jrows = json.loads(j)["rows"]
    crows = rows_csv(c)
    assert len(crows) == len(jrows)
    for a, b in zip(crows, jrows):
        assert a["side"] == b["side"]
        for k in ("d", "time", "opt", "ratio"):
            assert float(a[k]) == b[k]


def test_threads_do_not_change_output(capsys, monkeypatch):
    args = ["sweep", "--model", "hill:c=0.5", "--d-max", "1e5", "--format", "csv"]
    _, one, _ = run(capsys, *args)
    monkeypatch.setenv(cli.THREADS_ENV, "4")
    _, four, _ = run(capsys, *args)
    assert one == four


def test_optimize_history(capsys):
    code, out, _ = run(capsys, "optimize", "--model", "history:s=2", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["r"] == pytest.approx(1.8165, abs=1e-3) and rec["best_cr"] == pytest.approx(5.95, abs=1e-2)


def test_optimize_tailwind_unit(capsys):
    code, out, _ = run(capsys, "optimize", "--model", "tailwind:s=1", "--format", "json")
    rec = json.loads(out)
    assert rec["family"] == "tailwind-balanced"
    assert rec["r"] == pytest.approx(2, abs=1e-3) and rec["best_cr"] == pytest.approx(9, rel=1e-9)


def test_optimize_classic_simulated(capsys):
    code, out, _ = run(capsys, "optimize", "--model", "classic", "--objective", "simulated",
                       "--bracket", "1.1,4", "--format", "json")
    assert json.loads(out)["r"] == pytest.approx(2, abs=2e-2)


def test_optimize_bracket_error_exit_1(capsys):
    code, _, err = run(capsys, "optimize", "--model", "beacon:s=2", "--objective", "closed-form")
    assert code == 1 and "error" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "closed-forms")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["n_failed"] == 0
    assert {"name", "expected", "actual", "tolerance", "passed"} <= set(rep["checks"][0])
    code, out, _ = run(capsys, "verify", "feasibility")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_exit_code_reflects_failures(capsys):
    code, out, _ = run(capsys, "verify", "sandwich")
    rep = json.loads(out)
    assert code == (1 if rep["n_failed"] else 0)


@pytest.mark.parametrize("argv", [
    ["evaluate", "--model", "warp:s=2", "--d", "1"],
    ["evaluate", "--strategy", "geom:r=0.5", "--d", "1"],
    ["evaluate", "--d", "-1"],
    ["evaluate"],
    ["sweep", "--d-max", "1"],
    ["optimize", "--bracket", "2"],
    ["frobnicate"],
])
def test_parse_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


def test_simulation_error_exit_1(capsys):
    code, _, err = run(capsys, "evaluate", "--strategy", "explicit:1,2,3", "--d", "50")
    assert code == 1 and "never reaches" in err


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nmodel = beacon:s=4\nformat=json\nd-max = 4096\n")
    code, out, _ = run(capsys, "sweep", "--config", str(cfg))
    rep = json.loads(out)["report"]
    assert code == 0 and rep["d_max"] == 4096 and rep["sup_ratio"] == pytest.approx(6, rel=1e-2)
    # command line wins over the file
    _, out, _ = run(capsys, "sweep", "--config", str(cfg), "--model", "classic")
    assert json.loads(out)["report"]["sup_ratio"] == pytest.approx(9, rel=1e-2)


def test_config_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour=blue\n")
    with pytest.raises(SystemExit) as exc:
        cli.main(["sweep", "--config", str(cfg)])
    assert exc.value.code == 2


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "evaluate", "--d", "3", "--format", "json", "--output", str(path))
    assert code == 0 and out == "" and json.loads(path.read_text())["d"] == 3


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "terrain_search", "evaluate", "--d", "0.5", "--side", "right",
                           "--format", "csv"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert rows_csv(proc.stdout)[0]["ratio"] == "1"

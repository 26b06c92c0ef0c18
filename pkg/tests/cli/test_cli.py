import csv
import io
import json
import math

import pytest

from cli import run
from service.experiment import table_tau
from service.experiment.reference_values import CONVERGENCE_TABLE, SPRING_TABLE
from service.stability import StabilityFunctionService


def _csv_rows(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))


def test_integrate_exp_decay(capsys):
    code = run(["integrate", "--problem", "exp-decay", "--C", "1", "--tau", "0.1", "--T", "4"])
    rows = _csv_rows(capsys.readouterr().out)
    assert code == 0
    assert rows[0] == ["t", "u"]
    t, u = map(float, rows[-1])
    assert t == 4.0
    assert u == pytest.approx(math.exp(-4.0), rel=1e-6)


def test_integrate_json_output(tmp_path):
    out = tmp_path / "traj.json"
    args = ["integrate", "--problem", "spring", "--C", "0.5", "--tau", "0.01", "--T", "0.1"]
    assert run(args + ["--format", "json", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["variables"] == ["p", "q"]
    assert payload["C"] == 0.5
    assert len(payload["times"]) == 11


def test_non_positive_step_is_config_error(capsys):
    code = run(["integrate", "--problem", "exp-decay", "--tau", "0"])
    assert code == 1
    assert "tau must be positive" in capsys.readouterr().err


def test_blow_up_exit_code_and_marker(tmp_path, capsys):
    out = tmp_path / "lorenz.csv"
    code = run(["integrate", "--problem", "lorenz", "--C", "0", "--tau", "0.0625", "--output", str(out)])
    assert code == 2
    assert "NUMERICAL_BLOW_UP" in capsys.readouterr().err
    rows = _csv_rows(out.read_text())
    assert rows[-1][0] == "blow-up"
    assert all(math.isfinite(float(x)) for row in rows[1:-1] for x in row)


@pytest.mark.parametrize(
    "args",
    [
        ["integrate", "--problem", "pendulum", "--tau", "0.1"],
        ["integrate", "--problem", "spring", "--mode", "beta-shift", "--tau", "0.01"],
        ["integrate", "--problem", "spring", "--method", "euler", "--tau", "0.01"],
        [],
    ],
)
def test_configuration_errors(args):
    assert run(args) == 1


def test_stability_interval(capsys):
    assert run(["stability", "interval", "--C", "0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["case"] == "convex"
    assert -2.786 < payload["intervals"][0][0] < -2.785


def test_stability_imag_three_points(capsys):
    assert run(["stability", "imag", "--C", "1.25"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "three-points"
    assert payload["points"] == pytest.approx([-math.sqrt(8.0), 0.0, math.sqrt(8.0)], abs=1e-12)


def test_stability_constants_csv(capsys):
    assert run(["stability", "constants", "--format", "csv"]) == 0
    header, values = _csv_rows(capsys.readouterr().out)
    assert header == ["z1", "C1", "z2", "C2"]
    assert float(values[1]) == pytest.approx(0.4905, abs=5e-4)


def test_stability_locus(capsys):
    assert run(["stability", "locus", "--C", "0.5", "--nx", "181", "--ny", "101"]) == 0
    rows = _csv_rows(capsys.readouterr().out)
    assert rows[0] == ["re", "im"]
    for re, im in rows[1:]:
        assert abs(abs(StabilityFunctionService.f(0.5, complex(float(re), float(im)))) - 1.0) <= 1e-9


def test_converge_writes_both_files(tmp_path):
    out = tmp_path / "converge"
    assert run(["converge", "--experiment", "exp-decay", "--C", "0", "--levels", "1", "--output", str(out)]) == 0
    rows = _csv_rows((tmp_path / "converge.csv").read_text())
    assert len(rows) == 2
    assert rows[1][rows[0].index("order_u")] == ""
    payload = json.loads((tmp_path / "converge.json").read_text())
    assert payload["tau"] == 2.7


def test_bench_json(capsys):
    args = ["bench", "--experiment", "spring", "--C", "0.5", "--tau", repr(table_tau()), "--T", "4", "--format", "json"]
    assert run(args) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["experiment"] == "spring"
    (entry,) = payload["entries"]
    assert entry["tau"] == table_tau()
    assert entry["report"]["rows"][0]["reference"] is not None


def test_converge_published_table(capsys):
    assert run(["converge", "--table", "1", "--C", "0"]) == 0
    header, *rows = _csv_rows(capsys.readouterr().out)
    _, table = CONVERGENCE_TABLE[0.0]
    assert len(rows) == 6
    err = header.index("err_u")
    for row, (published, _) in zip(rows, table):
        assert float(row[err]) == pytest.approx(published, rel=5e-3)


def test_converge_table_and_experiment_agree(capsys):
    assert run(["converge", "--table", "1", "--C", "0.5", "--levels", "2"]) == 0
    by_table = capsys.readouterr().out
    assert run(["converge", "--experiment", "exp-decay", "--C", "0.5", "--levels", "2"]) == 0
    assert capsys.readouterr().out == by_table


def test_conflicting_selectors(capsys):
    assert run(["converge", "--table", "1", "--experiment", "spring"]) == 1
    assert "conflicts with --experiment" in capsys.readouterr().err


def test_bench_example_spring_block(capsys):
    assert run(["bench", "--example", "4.4", "--C", "0.5", "--jobs", "1"]) == 0
    header, *rows = _csv_rows(capsys.readouterr().out)
    tau, steps = header.index("tau"), header.index("steps")
    ref_p = header.index("ref_p")
    published = [row for row in rows if float(row[tau]) == table_tau()]
    assert [int(row[steps]) for row in published] == [s for _, s, _, _ in SPRING_TABLE[0.5]]
    assert [row[ref_p] for row in published] == ["%.4e" % p for _, _, p, _ in SPRING_TABLE[0.5]]


def test_stability_locus_stable_region(capsys):
    args = ["stability", "locus", "--C", "0", "--nx", "181", "--ny", "101"]
    assert run(args + ["--region", "stable"]) == 0
    rows = _csv_rows(capsys.readouterr().out)[1:]
    assert rows and all(float(re) <= 0.0 for re, _ in rows)
    assert run(args + ["--region", "stable", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["region"] == "stable"
    assert payload["points"] == len(rows)

import csv
import io

import numpy as np
import pytest

from core.exceptions import StorageError
from model.enums import LocusRegionEnum, ProblemIdEnum
from model.problem_model import State
from model.stability_model import BoundaryLocus, GridSpec
from model.trajectory_model import Trajectory
from schema.experiment.experiment_schema import ExperimentSpecSchema
from schema.report.report_schema import ErrorReportSchema, ErrorRowSchema, SweepEntrySchema
from service.experiment import ConvergenceService
from service.export import export_service
from service.export.export_service import BLOW_UP_MARKER, ExportService, format_float, format_reference


def _report() -> ErrorReportSchema:
    return ErrorReportSchema(
        experiment="exp-decay",
        method="rk4",
        C=0.0,
        tau=2.7,
        rows=[
            ErrorRowSchema(t=4.0, tau=2.7, steps=2, errors=[13.29], reference=[13.291]),
            ErrorRowSchema(t=4.0, tau=1.35, steps=3, errors=[0.3637], order=[5.19]),
        ],
    )


def test_number_formats():
    assert format_float(0.1) == "0.1"
    assert format_float(None) == ""
    assert format_reference(1.3291e01) == "1.3291e+01"


def test_report_csv_layout():
    text = ExportService.report_to_csv(_report())
    lines = text.split("\n")
    assert lines[0] == "method,t,tau,steps,err_u,order_u,ref_u,dev_u,divergent"
    assert lines[1].split(",")[-3:] == ["1.3291e+01", "", "false"]
    assert lines[2].split(",")[5] == "5.19"
    assert text.endswith("\n") and "\r" not in text


def test_entries_prefix_classification():
    entry = SweepEntrySchema(tau=0.001, z=-2.1, slope=3.5, divergent=True, report=_report())
    header, first = ExportService.entries_to_csv([entry]).split("\n")[:2]
    assert header.startswith("z,slope,classification,method")
    assert first.startswith("-2.1,3.5,divergent,")


def test_empty_entries_have_header_only():
    assert ExportService.entries_to_csv([]) == "z,slope,classification\n"


def test_trajectory_blow_up_marker():
    traj = Trajectory(
        states=[State(0.0, np.array([1.0, 2.0])), State(0.1, np.array([3.0, 4.0]))],
        step_size=0.1,
        method_tag="rk4",
        blew_up=True,
        blow_up_step=1,
    )
    lines = ExportService.trajectory_to_csv(traj, ["p", "q"]).strip().split("\n")
    assert lines[0] == "t,p,q"
    assert lines[2] == "0.1,3.0,4.0"
    assert lines[-1] == f"{BLOW_UP_MARKER},1,"

    report = ExportService.trajectory_report(traj, "spring", ["p", "q"], None)
    assert report.values == [[1.0, 2.0], [3.0, 4.0]]
    assert report.blow_up_step == 1


def test_write_text(tmp_path):
    path = ExportService.write_text(tmp_path / "out" / "table.csv", "a,b\n")
    assert path.read_bytes() == b"a,b\n"


def test_write_text_storage_error(tmp_path, monkeypatch):
    def broken(*args, **kwargs):
        raise PermissionError("read-only")

    monkeypatch.setattr(export_service, "open", broken, raising=False)
    with pytest.raises(StorageError):
        ExportService.write_text(tmp_path / "x.csv", "")


def test_locus_region_columns():
    points = np.array([-2.5 + 0.0j, 0.25 + 1.5j])
    locus = BoundaryLocus(c=0.0, points=points, segments=np.empty((0, 2), dtype=int), grid=GridSpec(), tolerance=1e-9)
    full = ExportService.locus_to_csv(locus)
    stable = ExportService.locus_to_csv(locus, LocusRegionEnum.STABLE)
    assert full == "re,im\n-2.5,0.0\n0.25,1.5\n"
    assert stable == "re,im\n-2.5,0.0\n"


def _optional(cell: str, parse=float):
    return None if cell == "" else parse(cell)


def test_convergence_csv_and_json_round_trip():
    report = ConvergenceService().run(ExperimentSpecSchema(problem_id=ProblemIdEnum.EXP_DECAY, c=0.0))
    text = ExportService.report_to_csv(report)

    rows = []
    for cells in list(csv.reader(io.StringIO(text)))[1:]:
        _, t, tau, steps, err, order, ref, dev, divergent = cells
        rows.append(
            ErrorRowSchema(
                t=float(t),
                tau=float(tau),
                steps=_optional(steps, int),
                errors=[_optional(err)],
                order=None if order == "" else [float(order)],
                reference=None if ref == "" else [float(ref)],
                deviation=None if dev == "" else [float(dev)],
                divergent=divergent == "true",
            )
        )
    assert ExportService.report_to_csv(report.model_copy(update={"rows": rows})) == text

    dumped = report.to_json()
    assert ErrorReportSchema.model_validate_json(dumped).to_json() == dumped

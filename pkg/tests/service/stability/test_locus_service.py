import numpy as np
import pytest

from core.config import configs
from core.exceptions import ValidationError
from model.enums import LocusRegionEnum
from model.stability_model import GridSpec
from service.stability import IntervalService, LocusService, StabilityFunctionService

SMALL_GRID = GridSpec(nx=361, ny=201)


@pytest.fixture(scope="module")
def loci():
    service = LocusService()
    return {c: service.boundary_locus(c, SMALL_GRID) for c in (-2.0, -1.0, 0.0, 0.5, 1.0)}


@pytest.mark.parametrize("c", [0.0, 0.5, 1.0])
def test_points_lie_on_unit_modulus_curve(loci, c):
    locus = loci[c]
    residual = np.abs(np.abs(StabilityFunctionService.f(c, locus.points)) - 1.0)
    assert residual.max() <= configs.LOCUS_TOLERANCE
    assert locus.segments.size == 0 or locus.segments.max() < locus.points.size


def test_real_axis_endpoint_is_on_locus(loci):
    left = IntervalService().stability_interval(0.0).left_endpoint
    assert np.min(np.abs(loci[0.0].stable_side() - left)) < 0.05


@pytest.mark.parametrize("c", [-2.0, -1.0, 0.0])
def test_origin_is_on_locus(loci, c):
    assert np.min(np.abs(loci[c].points)) < 0.1


def test_real_intervals_nest_for_non_positive_c():
    intervals = IntervalService()
    left = [intervals.stability_interval(c).left_endpoint for c in (-2.0, -1.0, 0.0)]
    assert left[0] > left[1] > left[2]


def test_stable_region_keeps_left_half_plane(loci):
    locus = loci[0.5]
    stable = locus.region_points(LocusRegionEnum.STABLE)
    assert stable.size > 0
    assert np.all(stable.real <= 0.0)
    assert stable.size < locus.region_points(LocusRegionEnum.FULL).size


def test_grid_must_cover_required_box():
    with pytest.raises(ValidationError):
        LocusService().boundary_locus(0.5, GridSpec(re_min=-3.0, re_max=1.0, im_min=-1.0, im_max=1.0, nx=50, ny=50))

import numpy as np
import pytest

from fovclutter.periphery import ArchParams, build_architecture, rasterize, \
    window_f, h_window, g_window, derived_counts
from fovclutter.periphery.windows import angular_center, \
    angular_width, log_eccentricity_center, log_eccentricity_width
from fovclutter.utils.errors import ValidationError
from fovclutter.utils.namespace import FOVEA, OUTSIDE


def test_window_values():
    assert window_f(0., 0.5) == 1.
    assert window_f(0.75, 0.5) == 0.
    assert window_f(-0.75, 0.5) == 0.
    assert window_f(0.5, 0.5) == pytest.approx(0.5, abs=1e-12)
    assert window_f(-0.5, 0.5) == pytest.approx(0.5, abs=1e-12)
    assert window_f(3., 1.) == 0.


def test_window_is_continuous():
    x = np.arange(-1., 1., 1e-6)
    values = window_f(x, 0.5)
    assert values.min() >= 0. and values.max() <= 1.
    assert np.abs(np.diff(values)).max() < 1e-5


def test_window_rejects_transition():
    with pytest.raises(ValidationError):
        window_f(0., 0.)
    with pytest.raises(ValidationError):
        window_f(0., 1.5)


def test_angular_partition_of_unity(rng):
    params = ArchParams()
    n_theta, _ = derived_counts(params)
    theta = rng.uniform(0., 2. * np.pi, size=10000)
    total = sum(h_window(theta, n, params) for n in range(n_theta))
    assert np.abs(total - 1.).max() < 1e-9


def test_angular_window_center_and_crossing():
    params = ArchParams()
    assert h_window(angular_center(3, params), 3, params) == \
        pytest.approx(1.)
    crossing = angular_center(3, params) + angular_width(params) / 2.
    assert h_window(crossing, 3, params) == pytest.approx(0.5)
    assert h_window(crossing, 4, params) == pytest.approx(0.5)


def test_eccentricity_partition_of_unity():
    params = ArchParams()
    _, n_e = derived_counts(params)
    w_e = log_eccentricity_width(params)
    e = params.e_0 * np.exp(np.linspace(w_e, w_e * (n_e - 1), 5000))
    total = sum(g_window(e, n, params) for n in range(n_e))
    assert np.abs(total - 1.).max() < 1e-9


def test_eccentricity_window_center_and_crossing():
    params = ArchParams()
    center = np.exp(log_eccentricity_center(5, params))
    assert g_window(center, 5, params) == pytest.approx(1.)
    crossing = np.exp(log_eccentricity_center(5, params)
                      + log_eccentricity_width(params) / 2.)
    assert g_window(crossing, 5, params) == pytest.approx(0.5)
    with pytest.raises(ValidationError):
        g_window(0., 5, params)


def test_default_architecture():
    arch = build_architecture()
    assert arch.n_theta == 25
    assert arch.n_e == 18
    assert arch.eccentricity_bands == list(range(7, 18))
    assert len(arch) == 275
    assert len(arch.to_frame()) == 275
    assert all(r.e_outer > arch.fovea for r in arch.regions.values())

    ids = [r.id for r in arch.regions.values()]
    assert ids == list(range(1, 276))
    first = arch.region_by_id(1)
    assert (first.n_theta, first.n_e) == (0, 7)
    assert arch.region(1, 7).id == 2


def test_scaling_doubles_counts():
    coarse = derived_counts(ArchParams())
    fine = derived_counts(ArchParams(scale=0.125))
    assert abs(fine[0] - 2 * coarse[0]) <= 1
    assert abs(fine[1] - 2 * coarse[1]) <= 1


def test_fovea_at_outer_radius():
    arch = build_architecture(ArchParams(fovea=24. - 1e-6))
    assert arch.eccentricity_bands == [17]
    assert len(arch) == 25


def test_count_overrides():
    arch = build_architecture(ArchParams(n_theta=8, n_e=10))
    assert arch.n_theta == 8 and arch.n_e == 10


@pytest.mark.parametrize('params', [ArchParams(scale=0.),
                                    ArchParams(e_0=3.),
                                    ArchParams(fovea=30.),
                                    ArchParams(t_0=0.),
                                    ArchParams(n_theta=0)])
def test_invalid_params(params):
    with pytest.raises(ValidationError):
        build_architecture(params)


def test_architecture_to_dict():
    record = build_architecture().to_dict()
    assert record['n_regions'] == 275
    assert record['params']['scale'] == 0.25


def test_fixation_is_foveal():
    arch = build_architecture()
    raster = rasterize(arch, 256, 190, (100., 80.), 0.088)
    assert raster.label[80, 100] == FOVEA
    # 1 deg to the right
    assert raster.label[80, 111] == FOVEA
    assert raster.label.dtype == np.int32
    assert not raster.label.flags.writeable


def test_every_foveal_pixel_is_labelled_fovea():
    arch = build_architecture()
    deg = 0.088
    raster = rasterize(arch, 256, 190, (100., 80.), deg)
    rows, cols = np.mgrid[0:190, 0:256]
    e = np.hypot(cols - 100., rows - 80.) * deg
    assert np.all(raster.label[e <= arch.fovea] == FOVEA)
    assert np.all(raster.label[e > arch.fovea] != FOVEA)


def test_labels_are_known_regions():
    arch = build_architecture()
    raster = rasterize(arch, 256, 190, (30., 20.), 0.2)
    labels = set(np.unique(raster.label))
    assert labels <= {OUTSIDE, FOVEA} | set(range(1, len(arch) + 1))
    # 0.2 deg/px reaches past the outer radius
    assert OUTSIDE in labels


def test_labelled_pixels_have_positive_weight(rng):
    arch = build_architecture()
    params = arch.params
    fixation = (120., 90.)
    deg = 0.088
    raster = rasterize(arch, 256, 190, fixation, deg)
    rows, cols = np.nonzero(raster.label > FOVEA)
    for i in rng.choice(rows.size, size=300, replace=False):
        r, c = rows[i], cols[i]
        region = arch.region_by_id(raster.label[r, c])
        dx, dy = c - fixation[0], r - fixation[1]
        theta = np.mod(np.arctan2(-dy, dx), 2. * np.pi)
        e = np.hypot(dx, dy) * deg
        weight = h_window(theta, region.n_theta, params) \
            * g_window(e, region.n_e, params)
        assert weight > 0


def test_translation_equivariance():
    arch = build_architecture()
    a = rasterize(arch, 256, 190, (100., 80.), 0.088).label
    b = rasterize(arch, 256, 190, (110., 85.), 0.088).label
    assert np.array_equal(a[:-5, :-10], b[5:, 10:])


def test_region_size_grows_with_eccentricity():
    arch = build_architecture()
    deg = 0.044
    raster = rasterize(arch, 512, 380, (255.5, 189.5), deg)
    reach = 189.5 * deg
    inside = [r.n_e for r in arch.regions.values() if r.e_outer <= reach]
    counts = raster.band_mean_pixel_counts()
    counts = counts[counts.index.isin(inside)]
    assert len(counts) >= 4
    assert np.all(np.diff(counts.values) > 0)


def test_fixation_outside_raster():
    arch = build_architecture()
    with pytest.raises(ValidationError):
        rasterize(arch, 64, 64, (64., 10.), 0.1)
    with pytest.raises(ValidationError):
        rasterize(arch, 64, 64, (10., -1.), 0.1)

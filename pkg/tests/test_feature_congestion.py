import numpy as np
import pytest

from fovclutter.clutter import FcConfig, fc_map, fc_map_from_lab, \
    color_clutter, contrast_clutter, orientation_clutter, feature_scales, \
    fc_roi_score, fc_target_score, validate_config
from fovclutter.clutter.feature_congestion import FcResult, FEATURES
from fovclutter.core import RasterImage, ScalarField, RoiSpec, TargetMask, \
    srgb_to_lab
from fovclutter.utils.errors import ValidationError, EmptyRegionError
from fovclutter.utils.namespace import VOLUME
from tests.utils import lab_image, constant_image, checkerboard, grating, \
    scene

PEAK = np.sqrt(2.) / 2.


def test_uniform_color_has_no_color_clutter():
    shape = (64, 64)
    lab = lab_image(np.full(shape, 50.), np.full(shape, 10.),
                    np.full(shape, -5.))
    for scale in range(3):
        assert color_clutter(lab, scale).values.max() < 1e-9


def test_color_boundary_beats_interior():
    a = np.zeros((64, 128))
    a[:, 64:] = 20.
    lab = lab_image(np.full(a.shape, 50.), a)
    values = color_clutter(lab, 0).values
    assert values[32, 63] > values[32, 0]
    assert values[32, 63] > values[32, 127]


def test_color_of_chroma_noise(rng):
    shape = (128, 128)
    lab = lab_image(np.full(shape, 50.), rng.normal(scale=5., size=shape),
                    rng.normal(scale=5., size=shape))
    assert color_clutter(lab, 0).values.mean() == \
        pytest.approx(np.sqrt(2.) * 5., rel=0.1)


def test_color_volume_statistic(rng):
    shape = (64, 64)
    a = rng.normal(scale=5., size=shape)
    cfg = FcConfig(color_statistic=VOLUME)
    # Perfectly correlated chroma spans no area
    volume = color_clutter(lab_image(np.full(shape, 50.), a, 2. * a), 0, cfg)
    assert volume.values.max() < 1e-4
    assert color_clutter(lab_image(np.full(shape, 50.), a, 2. * a), 0)\
        .values.mean() > 1.


def test_uniform_luminance_has_no_contrast_clutter():
    lab = lab_image(np.full((64, 64), 70.))
    assert contrast_clutter(lab, 0).values.max() < 1e-9


def test_contrast_scales_with_amplitude():
    board = checkerboard(96, 96, 8) - 0.5
    low = contrast_clutter(lab_image(50. + 10. * board), 0).values
    high = contrast_clutter(lab_image(50. + 20. * board), 0).values
    assert high.mean() / low.mean() == pytest.approx(2., rel=0.05)


def test_contrast_peaks_near_step_edge():
    L = np.full((64, 128), 30.)
    L[:, 64:] = 70.
    values = contrast_clutter(lab_image(L), 0).values
    # Pooling sigma is 20 px at 0.1 deg/px
    assert abs(int(np.argmax(values[32])) - 63.5) <= 20


def test_uniform_luminance_has_no_orientation_clutter():
    lab = lab_image(np.full((64, 64), 40.))
    assert orientation_clutter(lab, 0).values.max() < 1e-6


def test_plaid_beats_single_grating():
    single = 50. + 20. * grating(256, 256, 0., PEAK)
    plaid = 50. + 10. * grating(256, 256, 0., PEAK) \
        + 10. * grating(256, 256, np.pi / 2., PEAK)
    center = (slice(96, 160), slice(96, 160))
    single_values = orientation_clutter(lab_image(single), 0).values[center]
    plaid_values = orientation_clutter(lab_image(plaid), 0).values[center]
    assert single_values.mean() < 0.05 * plaid_values.mean()


def test_plaid_beats_blank_half():
    plaid = 50. + 10. * grating(128, 128, 0., PEAK) \
        + 10. * grating(128, 128, np.pi / 2., PEAK)
    plaid[:, 64:] = 50.
    values = orientation_clutter(lab_image(plaid), 0).values
    assert values[:, :32].mean() > values[:, 96:].mean()


def test_scale_out_of_range():
    lab = lab_image(np.full((32, 32), 50.))
    with pytest.raises(ValidationError):
        color_clutter(lab, 3)


def test_uniform_image_has_no_clutter():
    result = fc_map(constant_image(96, 72, 0.5))
    assert result.map.shape == (72, 96)
    assert result.score < 1e-6
    assert result.map.values.min() >= 0.


def test_score_is_map_mean():
    result = fc_map(scene(0))
    assert result.score == pytest.approx(result.map.values.mean(), rel=1e-12)
    assert result.map.values.min() >= 0.
    assert set(result.features) == set(FEATURES)


def test_max_over_scales():
    img = scene(1)
    cfg = FcConfig()
    result = fc_map(img, cfg)
    scales = feature_scales(srgb_to_lab(img), cfg)
    for feature, normalizer in zip(FEATURES, cfg.normalizers):
        collapsed = result.features[feature].values * normalizer
        for level in scales[feature]:
            assert level.shape == collapsed.shape
            assert np.all(collapsed >= level.values - 1e-12)


def test_doubling_weights_doubles_score():
    img = scene(2)
    base = fc_map(img, FcConfig(feature_weights=(0.2, 0.3, 0.5)))
    double = fc_map(img, FcConfig(feature_weights=(0.4, 0.6, 1.)))
    assert double.score == pytest.approx(2. * base.score, rel=1e-12)


def test_single_feature_weight():
    img = scene(3)
    cfg = FcConfig(feature_weights=(1., 0., 0.))
    result = fc_map(img, cfg)
    assert np.allclose(result.map.values, result.features['color'].values)


def test_chroma_texture_increases_clutter(rng):
    gray = np.clip(0.5 + rng.normal(scale=0.01, size=(96, 128)), 0., 1.)
    plain = np.stack([gray] * 3, axis=-1)
    textured = np.array(plain)
    textured[:, :64] = rng.uniform(0.3, 0.7, size=(96, 64, 3))
    assert fc_map(RasterImage(textured, 0.1)).score \
        > fc_map(RasterImage(plain, 0.1)).score


def test_rotation_invariance():
    img = scene(4, width=129, height=129)
    rotated = RasterImage(np.rot90(img.pixels), img.deg_per_px)
    assert fc_map(rotated).score == pytest.approx(fc_map(img).score,
                                                  rel=0.01)


def test_invalid_configs():
    with pytest.raises(ValidationError):
        validate_config(FcConfig(feature_weights=(0., 0., 0.)))
    with pytest.raises(ValidationError):
        validate_config(FcConfig(normalizers=(10., 0., 100.)))
    with pytest.raises(ValidationError):
        validate_config(FcConfig(n_orientations=3))
    with pytest.raises(ValidationError):
        validate_config(FcConfig(n_scales=0))


def test_fc_from_lab_matches_srgb():
    img = scene(5)
    assert fc_map_from_lab(srgb_to_lab(img)).score == fc_map(img).score


def _blocks():
    rows, cols = np.mgrid[0:200, 0:200]
    values = (rows // 50) * 4 + cols // 50
    return FcResult(ScalarField(values.astype(np.float64), 0.125))


def test_roi_score_block_map():
    result = _blocks()
    # Rows and cols 76..123: blocks 1 and 2 in both directions
    roi = RoiSpec((100., 100.), 6.)
    expected = np.mean([5.] * 24 * 24 + [6.] * 24 * 24
                       + [9.] * 24 * 24 + [10.] * 24 * 24)
    assert fc_roi_score(result, roi) == pytest.approx(expected)


def test_roi_score_of_full_image():
    result = _blocks()
    roi = RoiSpec((100., 100.), 1000.)
    assert fc_roi_score(result, roi) == pytest.approx(result.score)


def test_roi_score_over_zero_half():
    values = np.ones((100, 100))
    values[:, :50] = 0.
    result = FcResult(ScalarField(values, 0.125))
    assert fc_roi_score(result, RoiSpec((20., 50.), 2.)) == 0.


def test_roi_score_errors():
    result = _blocks()
    with pytest.raises(EmptyRegionError):
        fc_roi_score(result, RoiSpec((-1000., -1000.), 1.))
    mask = TargetMask((0, 200, 0, 200))
    with pytest.raises(EmptyRegionError):
        fc_roi_score(result, RoiSpec((100., 100.), 6.), mask)


def test_target_score():
    result = _blocks()
    assert fc_target_score(result, TargetMask((0, 10, 60, 70))) == 1.
    with pytest.raises(EmptyRegionError):
        fc_target_score(result, TargetMask.empty())

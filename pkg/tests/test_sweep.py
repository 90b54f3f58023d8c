import os

import numpy as np
import pandas as pd
import pytest

from fovclutter.analysis import sweep, synthetic_study, ScoreCache, \
    load_score_cache, bootstrap_correlation, score_fingerprint
from fovclutter.clutter import make_model
from fovclutter.utils.errors import MissingImageError, ValidationError
from fovclutter.utils.namespace import L1, KL, METRICS, IMAGE, TARGET, ROI
from tests.utils import TEST_CONFIG
from tests.settings import TEST_DEG_PER_PX, SCENE_WIDTH, SCENE_HEIGHT

N_BOOTSTRAP = 500
OTHER_CONFIG = TEST_CONFIG._replace(arch=TEST_CONFIG.arch._replace(fovea=6.),
                                    target_side_deg=0.5)


@pytest.fixture(scope='module')
def model():
    return make_model('fc')


@pytest.fixture(scope='module')
def study(model):
    return synthetic_study(model, n_images=6, width=SCENE_WIDTH,
                           height=SCENE_HEIGHT, deg_per_px=TEST_DEG_PER_PX,
                           n_trials=22, config=TEST_CONFIG, seed=3)


@pytest.fixture(scope='module')
def full_sweep(model, study):
    images, trials = study
    cache = ScoreCache()
    result = sweep(trials, model, images, config=TEST_CONFIG,
                   n_bootstrap=N_BOOTSTRAP, seed=0, cache=cache)
    return result, cache


def test_study_layout(study):
    images, trials = study
    assert len(images) == 6
    assert len(trials) == 22
    assert all(0. <= t.hit_rate <= 1. for t in trials)
    assert {t.image_id for t in trials} <= set(images)
    for t in trials:
        assert min(abs(t.eccentricity - e) for e in (1., 4., 9., 15.)) < 0.1


def test_study_rejects_bad_geometry(model):
    with pytest.raises(ValidationError):
        synthetic_study(model, n_images=2, width=128, height=96,
                        deg_per_px=0.088, config=TEST_CONFIG)
    with pytest.raises(ValidationError):
        synthetic_study(model, n_images=1, n_trials=3, width=256, height=190,
                        deg_per_px=0.088, config=TEST_CONFIG)


def test_sweep_grid(full_sweep):
    result, cache = full_sweep
    assert len(result.reports) == 15
    assert set(result.reports['row']) == set(METRICS)
    assert sorted(set(result.reports['roi_deg'])) == [4., 6., 8., 10., 12.]
    assert len(result.baseline_reports) == 15
    assert set(result.baseline_reports['row']) == {IMAGE, TARGET, ROI}
    assert len(cache) == 22 * 15

    table = result.table()
    assert list(table.index) == list(METRICS) + [IMAGE, TARGET, ROI]
    assert list(table.columns) == ['4 deg', '6 deg', '8 deg', '10 deg',
                                   '12 deg']
    assert 'L1' in result.to_text()


def test_generating_cell_is_negative(full_sweep):
    result, _ = full_sweep
    reports = result.reports.set_index(['row', 'roi_deg'])
    cell = reports.loc[(L1, 6.)]
    assert cell['r_mean'] < -0.7
    assert cell['p_value'] < 0.05
    assert cell['n'] == 22 and cell['df'] == 20

    baselines = result.baseline_reports.set_index(['row', 'roi_deg'])
    image = baselines.loc[(IMAGE, 6.)]
    assert abs(image['r_mean']) <= abs(cell['r_mean']) - 0.3


def test_single_cell_matches_standalone(model, study, full_sweep):
    images, trials = study
    _, cache = full_sweep
    result = sweep(trials, model, images, roi_sides=[6.], metrics=[L1],
                   config=TEST_CONFIG, n_bootstrap=N_BOOTSTRAP, seed=11,
                   cache=cache, baselines=False)
    scores = result.scores['score'].values
    hits = np.array([t.hit_rate for t in trials])
    expected = bootstrap_correlation(scores, hits, N_BOOTSTRAP, 11)
    row = result.reports.iloc[0]
    for field in expected._fields:
        assert row[field] == getattr(expected, field)


def test_affine_hits_give_perfect_correlation(model, study, full_sweep):
    images, trials = study
    _, cache = full_sweep
    scores = np.array([cache.get(ScoreCache.key(model.name, t.image_id,
                                                t.fixation, t.target, 6., L1))
                       .ffc for t in trials])
    affine = [t._replace(hit_rate=0.9 - 0.5 * s / scores.max())
              for t, s in zip(trials, scores)]
    result = sweep(affine, model, images, roi_sides=[6.], metrics=[L1],
                   config=TEST_CONFIG, n_bootstrap=N_BOOTSTRAP,
                   cache=cache, baselines=False)
    assert result.reports.iloc[0]['r_mean'] == pytest.approx(-1., abs=1e-9)


def test_cached_sweep_is_identical(model, study, full_sweep):
    images, trials = study
    result, cache = full_sweep
    again = sweep(trials, model, images, config=TEST_CONFIG,
                  n_bootstrap=N_BOOTSTRAP, seed=0, cache=cache)
    pd.testing.assert_frame_equal(again.reports, result.reports)
    assert len(cache) == 22 * 15


def test_cache_file(tmp_path, full_sweep):
    _, cache = full_sweep
    filename = str(tmp_path / 'scores.h5')
    cache.save(filename)
    loaded = load_score_cache(filename)
    assert len(loaded) == len(cache)
    assert loaded.fingerprint == cache.fingerprint
    key = next(iter(cache._data))
    assert loaded.get(key) == cache.get(key)


def test_missing_image(model, study):
    images, trials = study
    partial = dict(images)
    partial.pop(trials[0].image_id)
    with pytest.raises(MissingImageError):
        sweep(trials, model, partial, config=TEST_CONFIG,
              n_bootstrap=N_BOOTSTRAP)


def test_image_folder_needs_sampling(model, study, tmp_path):
    _, trials = study
    with pytest.raises(ValidationError):
        sweep(trials, model, str(tmp_path), config=TEST_CONFIG)


def _scores_at(cache, model, trials, roi_deg, metric):
    return np.array([cache.get(ScoreCache.key(model.name, t.image_id,
                                              t.fixation, t.target, roi_deg,
                                              metric)).ffc for t in trials])


def test_fingerprint_covers_settings(model):
    fingerprint = score_fingerprint(model, TEST_CONFIG)
    assert fingerprint == score_fingerprint(make_model('fc'), TEST_CONFIG)
    # ROI side and metric are part of the keys
    assert fingerprint == score_fingerprint(
        model, TEST_CONFIG._replace(roi_deg=12., metric=KL))

    assert fingerprint != score_fingerprint(model, OTHER_CONFIG)
    assert fingerprint != score_fingerprint(
        model, TEST_CONFIG._replace(half_resolution=True))
    assert fingerprint != score_fingerprint(
        model, TEST_CONFIG._replace(epsilon=1e-6))
    assert fingerprint != score_fingerprint(model, TEST_CONFIG, 0.044)
    assert fingerprint != score_fingerprint(make_model('fc', {'n_scales': 2}),
                                            TEST_CONFIG)
    assert fingerprint != score_fingerprint(make_model('ed'), TEST_CONFIG)


def test_cache_of_other_configuration_is_refused(model, study, full_sweep):
    images, trials = study
    _, cache = full_sweep
    size = len(cache)
    with pytest.raises(ValidationError):
        sweep(trials, model, images, roi_sides=[6.], metrics=[L1],
              config=OTHER_CONFIG, n_bootstrap=N_BOOTSTRAP, cache=cache,
              baselines=False)
    assert len(cache) == size

    fresh = sweep(trials, model, images, roi_sides=[6.], metrics=[L1],
                  config=OTHER_CONFIG, n_bootstrap=N_BOOTSTRAP,
                  cache=ScoreCache(), baselines=False)
    assert not np.allclose(fresh.scores['score'].values,
                           _scores_at(cache, model, trials, 6., L1))


def test_cache_file_keeps_fingerprint(tmp_path, model, study, full_sweep):
    images, trials = study
    _, cache = full_sweep
    filename = str(tmp_path / 'scores.h5')
    cache.save(filename)

    loaded = load_score_cache(filename)
    result = sweep(trials, model, images, roi_sides=[6.], metrics=[L1],
                   config=TEST_CONFIG, n_bootstrap=N_BOOTSTRAP, cache=loaded,
                   baselines=False)
    assert len(loaded) == len(cache)
    assert np.array_equal(result.scores['score'].values,
                          _scores_at(cache, model, trials, 6., L1))

    with pytest.raises(ValidationError):
        sweep(trials, model, images, roi_sides=[6.], metrics=[L1],
              config=OTHER_CONFIG, n_bootstrap=N_BOOTSTRAP,
              cache=load_score_cache(filename), baselines=False)


def test_scorer_logs_go_to_log_folder(model, study, tmp_path):
    images, trials = study
    first = [t for t in trials if t.image_id == trials[0].image_id]
    folder = str(tmp_path / 'logs')
    sweep(first, model, images, roi_sides=[6.], metrics=[L1],
          config=TEST_CONFIG, n_bootstrap=N_BOOTSTRAP, cache=ScoreCache(),
          baselines=False, log_folder=folder)
    names = [n for n in os.listdir(folder) if n.startswith('FoveatedScorer')]
    assert len(names) == 1
    with open(os.path.join(folder, names[0])) as fid:
        assert 'fixation=' in fid.read()

import json
import os

import numpy as np
import pytest
from PIL import Image

from fovclutter.core import ScalarField
from fovclutter.io import save_cmap, load_cmap, load_image, save_image, \
    save_heatmap, save_label_map, load_trials, save_trials, RunConfig
from fovclutter.io.cmap import HEADER
from fovclutter.io.trials import TrialRecord, image_path
from fovclutter.periphery import build_architecture, rasterize
from fovclutter.utils.errors import ValidationError, TrialValidationError, \
    MissingImageError, EccentricityWarning
from tests.utils import write_png, scene

HEADER_ROW = 'image_id,fix_x,fix_y,tgt_x,tgt_y,ecc_deg,hit_rate\n'


def _write(path, text):
    with open(path, 'w') as fid:
        fid.write(text)
    return str(path)


def test_cmap_layout(tmp_path, rng):
    field = ScalarField(rng.uniform(size=(5, 7)), 0.044)
    path = str(tmp_path / 'map.cmap')
    save_cmap(field, path)
    with open(path, 'rb') as fid:
        blob = fid.read()
    assert HEADER.itemsize == 16
    assert len(blob) == 16 + 5 * 7 * 4 + 8
    assert blob[:4] == b'CMAP'
    header = np.frombuffer(blob, dtype=HEADER, count=1)[0]
    assert (header['version'], header['width'], header['height']) == (1, 7, 5)
    assert blob[14:16] == b'\x00\x00'


def test_cmap_values(tmp_path, rng):
    field = ScalarField(rng.uniform(size=(5, 7)), 0.044)
    path = str(tmp_path / 'map.cmap')
    save_cmap(field, path)
    loaded = load_cmap(path)
    assert loaded.shape == (5, 7)
    assert loaded.deg_per_px == 0.044
    assert np.array_equal(loaded.values,
                          field.values.astype(np.float32).astype(np.float64))


def test_cmap_is_deterministic(tmp_path, rng):
    field = ScalarField(rng.uniform(size=(4, 4)), 0.1)
    first, second = str(tmp_path / 'a.cmap'), str(tmp_path / 'b.cmap')
    save_cmap(field, first)
    save_cmap(field, second)
    with open(first, 'rb') as a, open(second, 'rb') as b:
        assert a.read() == b.read()


def test_cmap_rejects_bad_files(tmp_path, rng):
    path = str(tmp_path / 'map.cmap')
    save_cmap(ScalarField(rng.uniform(size=(4, 4)), 0.1), path)
    with open(path, 'rb') as fid:
        blob = fid.read()

    bad_magic = str(tmp_path / 'magic.cmap')
    with open(bad_magic, 'wb') as fid:
        fid.write(b'XMAP' + blob[4:])
    with pytest.raises(ValidationError):
        load_cmap(bad_magic)

    truncated = str(tmp_path / 'short.cmap')
    with open(truncated, 'wb') as fid:
        fid.write(blob[:-12])
    with pytest.raises(ValidationError):
        load_cmap(truncated)


def test_load_8_bit_image(tmp_path):
    pixels = np.zeros((10, 12, 3))
    pixels[:, :6] = 1.
    path = write_png(str(tmp_path / 'half.png'), pixels)
    img = load_image(path, 0.022)
    assert (img.width, img.height) == (12, 10)
    assert img.deg_per_px == 0.022
    assert np.array_equal(img.pixels, pixels)


def test_load_16_bit_grayscale(tmp_path):
    values = np.full((8, 8), 65535, dtype=np.uint16)
    values[:, :4] = 0
    path = str(tmp_path / 'gray16.png')
    Image.fromarray(values).save(path)
    img = load_image(path, 0.044)
    assert img.pixels.shape == (8, 8, 3)
    assert np.allclose(img.pixels[:, 4:], 1.)
    assert np.allclose(img.pixels[:, :4], 0.)


def test_load_missing_image(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_image(str(tmp_path / 'none.png'), 0.044)


def test_image_round_trip(tmp_path):
    img = scene(0)
    path = str(tmp_path / 'scene.png')
    save_image(img, path)
    loaded = load_image(path, img.deg_per_px)
    assert np.abs(loaded.pixels - img.pixels).max() <= 1. / 255. + 1e-12


def test_heatmap_sidecar(tmp_path, rng):
    field = ScalarField(rng.uniform(1., 3., size=(6, 9)), 0.1)
    path = str(tmp_path / 'map.png')
    save_heatmap(field, path)
    with open(path + '.json') as fid:
        sidecar = json.load(fid)
    assert sidecar['min'] == field.values.min()
    assert sidecar['max'] == field.values.max()
    assert (sidecar['width'], sidecar['height']) == (9, 6)
    assert Image.open(path).size == (9, 6)


def test_label_map(tmp_path):
    raster = rasterize(build_architecture(), 64, 48, (32., 24.), 0.2)
    path = str(tmp_path / 'labels.png')
    save_label_map(raster, path)
    rgb = np.asarray(Image.open(path))
    assert rgb.shape == (48, 64, 3)
    assert tuple(rgb[24, 32]) == (255, 255, 255)


def test_trials_round_trip(tmp_path):
    trials = [TrialRecord('scene_{:02d}'.format(i), (100. + i, 50.),
                          (20., 50.), (80. + i) * 0.044, 0.5)
              for i in range(46)]
    path = str(tmp_path / 'trials.csv')
    save_trials(trials, path)
    loaded = load_trials(path, deg_per_px=0.044)
    assert len(loaded) == 46
    assert loaded[3].image_id == 'scene_03'
    assert loaded[3].fixation == (103., 50.)
    assert loaded[3].eccentricity == pytest.approx(83. * 0.044, abs=1e-6)


def test_trials_bad_hit_rate(tmp_path):
    path = _write(tmp_path / 'trials.csv',
                  HEADER_ROW
                  + 'a,10,10,20,10,0.44,0.5\n'
                  + 'b,10,10,20,10,0.44,1.2\n')
    with pytest.raises(TrialValidationError) as excinfo:
        load_trials(path)
    assert excinfo.value.rows[0][0] == 3
    assert 'line 3' in str(excinfo.value)


def test_trials_unparsable_and_missing_columns(tmp_path):
    path = _write(tmp_path / 'trials.csv',
                  HEADER_ROW + 'a,ten,10,20,10,0.44,0.5\n')
    with pytest.raises(TrialValidationError):
        load_trials(path)

    path = _write(tmp_path / 'short.csv', 'image_id,fix_x\na,1\n')
    with pytest.raises(TrialValidationError) as excinfo:
        load_trials(path)
    assert excinfo.value.rows[0][0] == 1


def test_trials_eccentricity_warning(tmp_path):
    path = _write(tmp_path / 'trials.csv',
                  HEADER_ROW
                  + 'a,10,10,110,10,4.4,0.5\n'
                  + 'b,10,10,110,10,9.0,0.5\n')
    with pytest.warns(EccentricityWarning, match='lines 3'):
        trials = load_trials(path, deg_per_px=0.044)
    assert len(trials) == 2


def test_image_path(tmp_path):
    write_png(str(tmp_path / 'scene_00.png'), np.zeros((4, 4)))
    assert image_path(str(tmp_path), 'scene_00') == \
        os.path.join(str(tmp_path), 'scene_00.png')
    with pytest.raises(MissingImageError):
        image_path(str(tmp_path), 'scene_01')


def test_default_config():
    config = RunConfig.resolve()
    assert config.deg_per_px == 0.044
    assert config.file_deg_per_px == 0.022
    assert config.foveation_config().roi_deg == 6.
    assert config.arch_params().fovea == 2.
    assert len(config.hash) == 16
    assert RunConfig.resolve().hash == config.hash


def test_config_precedence(tmp_path):
    path = _write(tmp_path / 'run.yml',
                  'half_resolution: false\nfoveation:\n  roi_deg: 4\n')
    from_file = RunConfig.resolve(path)
    assert from_file.file_deg_per_px == 0.044
    assert from_file.foveation_config().roi_deg == 4

    flags = RunConfig.resolve(path, {'foveation': {'roi_deg': 8.,
                                                   'metric': None}})
    assert flags.foveation_config().roi_deg == 8.
    assert flags.foveation_config().metric == 'L1'
    assert flags.hash != from_file.hash


def test_config_rejects_unknown_keys(tmp_path):
    path = _write(tmp_path / 'run.yml', 'foveation:\n  roi_size: 4\n')
    with pytest.raises(ValidationError):
        RunConfig.resolve(path)
    path = _write(tmp_path / 'bad.yml', 'foveation:\n  metric: L7\n')
    with pytest.raises(ValidationError):
        RunConfig.resolve(path)


def test_config_models():
    config = RunConfig.resolve(overrides={'edge_density': {'high': 0.4}})
    assert config.model('ed').parameters.high == 0.4
    assert config.model('fc').parameters == config.fc_config()
    assert config.model('se').parameters.bins == 256

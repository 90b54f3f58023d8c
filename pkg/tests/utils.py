import numpy as np
from PIL import Image

from fovclutter.analysis.synthetic import make_scene, draw_target
from fovclutter.core import ScalarField, RasterImage, LabImage
from fovclutter.foveation import FoveationConfig
from fovclutter.utils.namespace import FOVEA
from tests.settings import TEST_DEG_PER_PX, SCENE_WIDTH, SCENE_HEIGHT

# Scenes are small enough to be scored at native resolution
TEST_CONFIG = FoveationConfig(half_resolution=False)

TARGET = (40., 95.)
ECCENTRICITIES = (1., 4., 9., 15.)


def constant_image(width=64, height=48, value=0.5, deg_per_px=0.1):
    return RasterImage(np.full((height, width, 3), value), deg_per_px)


def lab_image(L, a=None, b=None, deg_per_px=0.1):
    L = np.asarray(L, dtype=np.float64)
    a = np.zeros(L.shape) if a is None else a
    b = np.zeros(L.shape) if b is None else b
    return LabImage(ScalarField(L, deg_per_px),
                    ScalarField(a, deg_per_px),
                    ScalarField(b, deg_per_px))


def grating(width, height, theta, frequency, amplitude=1., offset=0.):
    """ Cosine grating varying along (cos theta, sin theta) in (x, y) """
    rows, cols = np.mgrid[0:height, 0:width].astype(np.float64)
    phase = frequency * (cols * np.cos(theta) + rows * np.sin(theta))
    return offset + amplitude * np.cos(phase)


def checkerboard(width, height, square):
    rows, cols = np.mgrid[0:height, 0:width]
    return ((rows // square + cols // square) % 2).astype(np.float64)


def scene(seed, width=SCENE_WIDTH, height=SCENE_HEIGHT,
          deg_per_px=TEST_DEG_PER_PX, n_shapes=40):
    rng = np.random.default_rng(seed)
    pixels = make_scene(width, height, n_shapes, rng)
    pixels = draw_target(pixels, TARGET, 0.5 / deg_per_px)
    return RasterImage(pixels, deg_per_px)


def fixture_scenes(n=10):
    return [scene(seed, n_shapes=20 + 5 * seed) for seed in range(n)]


def fixation_at(eccentricity, deg_per_px=TEST_DEG_PER_PX, target=TARGET):
    return (target[0] + float(np.round(eccentricity / deg_per_px)),
            target[1])


def write_png(path, pixels):
    """ 8 bit PNG of an array in [0,1], (h, w) or (h, w, 3) """
    Image.fromarray(np.round(np.asarray(pixels) * 255).astype(np.uint8)) \
        .save(path, format='PNG')
    return path


def naive_foveate(values, label, masked=None):
    """ Reference pooling with explicit loops over the pixels """
    height, width = values.shape
    if masked is None:
        masked = np.zeros(values.shape, dtype=bool)

    maxima = {}
    for r in range(height):
        for c in range(width):
            l = label[r, c]
            if l > FOVEA and not masked[r, c]:
                maxima[l] = max(maxima.get(l, -np.inf), values[r, c])

    pooled = np.array(values, copy=True)
    for r in range(height):
        for c in range(width):
            l = label[r, c]
            if masked[r, c]:
                pooled[r, c] = 0.
            elif l > FOVEA:
                pooled[r, c] = maxima.get(l, 0.)
    return pooled

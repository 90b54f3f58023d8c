# -*- coding: utf-8 -*-
"""
.. module:: fovclutter
   :platform: Unix, Windows
   :synopsis: Foveated clutter models in Python

.. moduleauthor:: fovclutter team

[---------]

Copyright 2024 fovclutter team

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.

"""

import numpy as np
from skimage import draw
from scipy import ndimage

from ..core.fields import RasterImage
from ..foveation.ffc import FoveatedScorer, FoveationConfig
from ..io.trials import TrialRecord
from ..utils.errors import ValidationError
from ..utils.logger import get_bistream_logger

ECCENTRICITIES = (1., 4., 9., 15.)
TARGET_OFFSET_DEG = 3.5
TARGET_SIDE_DEG = 0.5


def make_scene(width, height, n_shapes, rng):
    """
    Procedural scene: smooth colored background, textured patches and
    n_shapes random colored shapes

    :return: array (height, width, 3) in [0,1]
    """
    background = rng.uniform(0.3, 0.7, size=3)
    pixels = np.ones((height, width, 3)) * background
    # Low frequency shading
    shading = ndimage.gaussian_filter(rng.normal(size=(height, width)),
                                      max(width, height) / 16.)
    shading /= max(np.abs(shading).max(), 1e-12)
    pixels += 0.1 * shading[:, :, None]

    for _ in range(n_shapes):
        color = rng.uniform(0., 1., size=3)
        kind = rng.integers(3)
        r = rng.uniform(0.02, 0.08) * min(width, height)
        cy, cx = rng.uniform(0, height), rng.uniform(0, width)
        if kind == 0:
            rr, cc = draw.disk((cy, cx), r, shape=(height, width))
        elif kind == 1:
            rr, cc = draw.rectangle((cy - r, cx - r), extent=(2 * r, 1.5 * r),
                                    shape=(height, width))
        else:
            angles = np.sort(rng.uniform(0, 2 * np.pi, size=3))
            rr, cc = draw.polygon(cy + r * np.sin(angles),
                                  cx + r * np.cos(angles),
                                  shape=(height, width))
        rr, cc = np.ravel(rr).astype(int), np.ravel(cc).astype(int)
        if rng.uniform() < 0.3:
            texture = rng.uniform(-0.2, 0.2, size=(len(rr), 1))
            pixels[rr, cc] = color + texture
        else:
            pixels[rr, cc] = color

    return np.clip(pixels, 0., 1.)


def draw_target(pixels, center, side_px):
    """ Dark square with a bright core, centered at (x, y) """
    height, width = pixels.shape[:2]
    x, y = center
    half = max(side_px / 2., 1.)
    rr, cc = draw.rectangle((y - half, x - half), (y + half, x + half),
                            shape=(height, width))
    pixels[rr.astype(int), cc.astype(int)] = (0.1, 0.1, 0.1)
    rr, cc = draw.disk((y, x), max(half / 2., 1.), shape=(height, width))
    pixels[rr, cc] = (0.9, 0.9, 0.2)
    return pixels


def synthetic_study(model, n_images=12, eccentricities=ECCENTRICITIES,
                    width=1024, height=760, deg_per_px=0.022, n_trials=46,
                    alpha=0.8, sigma=0.05, config=None, seed=0,
                    log_folder=None):
    """
    Generates scenes and forced fixation trials whose hit rates fall with
    the foveated score of the model:
    hit_rate = clamp(1 - alpha * score / max(score) + N(0, sigma))

    :param model: DenseModel driving the hit rates
    :param n_images: number of scenes
    :param eccentricities: target eccentricities in degrees
    :param width: scene width in pixels
    :param height: scene height in pixels
    :param deg_per_px: sampling of the scenes
    :param n_trials: number of trials kept, at most n_images x eccentricities
    :param config: FoveationConfig used to score the trials
    :return: dict image_id -> RasterImage, list of TrialRecord
    """
    logger = get_bistream_logger('synthetic_study', log_folder)
    config = config or FoveationConfig()
    rng = np.random.default_rng(seed)

    target_x = TARGET_OFFSET_DEG / deg_per_px
    if target_x + max(eccentricities) / deg_per_px > width - 1:
        raise ValidationError('A {} px wide scene at {:g} deg/px cannot hold '
                              'a {:g} deg eccentricity'
                              .format(width, deg_per_px, max(eccentricities)))
    total = n_images * len(eccentricities)
    if not 5 <= n_trials <= total:
        raise ValidationError('n_trials must lie in [5, {}], got {}'
                              .format(total, n_trials))

    target = (float(np.round(target_x)), float(np.round((height - 1) / 2.)))
    images = {}
    candidates = []
    for i in range(n_images):
        image_id = 'scene_{:02d}'.format(i)
        n_shapes = int(rng.integers(5, 80))
        pixels = make_scene(width, height, n_shapes, rng)
        pixels = draw_target(pixels, target, TARGET_SIDE_DEG / deg_per_px)
        # 8 bit levels, so that saved scenes score as generated
        pixels = np.round(pixels * 255.) / 255.
        images[image_id] = RasterImage(pixels, deg_per_px)
        for e in eccentricities:
            fixation = (target[0] + float(np.round(e / deg_per_px)), target[1])
            candidates.append((image_id, fixation))

    # Trials lost to fixation breaks
    kept = np.sort(rng.choice(total, size=n_trials, replace=False))
    candidates = [candidates[k] for k in kept]

    scores = []
    scorers = {}
    for image_id, fixation in candidates:
        if image_id not in scorers:
            scorers = {image_id: FoveatedScorer(model, images[image_id],
                                                config)}
        scores.append(scorers[image_id].score(fixation, target).ffc)
    scores = np.array(scores)

    peak = scores.max() if scores.max() > 0 else 1.
    noise = rng.normal(0., sigma, size=len(scores))
    hits = np.clip(1. - alpha * scores / peak + noise, 0., 1.)

    trials = [TrialRecord(image_id=image_id,
                          fixation=fixation,
                          target=target,
                          eccentricity=float(np.hypot(fixation[0] - target[0],
                                                      fixation[1] - target[1])
                                             * deg_per_px),
                          hit_rate=float(h))
              for (image_id, fixation), h in zip(candidates, hits)]

    logger.info('Generated {} scenes and {} trials'.format(len(images),
                                                          len(trials)))
    return images, trials

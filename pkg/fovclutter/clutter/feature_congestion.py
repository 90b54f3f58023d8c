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

from collections import namedtuple

import numpy as np

from ..core.color import srgb_to_lab
from ..core.fields import ScalarField, LabImage
from ..core.filters import oriented_energy
from ..core.pyramid import gaussian_pyramid, upsample_to, pool_values, \
    local_variance
from ..utils.errors import ValidationError, EmptyRegionError
from ..utils.namespace import TRACE, VOLUME

COLOR = 'color'
CONTRAST = 'contrast'
ORIENTATION = 'orientation'
FEATURES = (COLOR, CONTRAST, ORIENTATION)

FcConfig = namedtuple('FcConfig', ['n_scales',
                                   'feature_weights',
                                   'normalizers',
                                   'pool_sigma_deg',
                                   'n_orientations',
                                   'orientation_sigma',
                                   'dog_center',
                                   'dog_surround',
                                   'color_statistic'])
FcConfig.__new__.__defaults__ = (3,
                                 (1. / 3., 1. / 3., 1. / 3.),
                                 (10., 5., 100.),
                                 2.,
                                 4,
                                 2.,
                                 1.,
                                 3.,
                                 TRACE)


def validate_config(cfg):
    if int(cfg.n_scales) < 1:
        raise ValidationError('n_scales must be at least 1, got {}'
                              .format(cfg.n_scales))
    weights = np.asarray(cfg.feature_weights, dtype=np.float64)
    if weights.shape != (3,) or np.any(weights < 0) or not np.any(weights > 0):
        raise ValidationError('Feature weights must be 3 non-negative values, '
                              'not all zero, got {}'
                              .format(cfg.feature_weights))
    normalizers = np.asarray(cfg.normalizers, dtype=np.float64)
    if normalizers.shape != (3,) or np.any(normalizers <= 0):
        raise ValidationError('Normalizers must be 3 positive values, got {}'
                              .format(cfg.normalizers))
    if not cfg.pool_sigma_deg > 0:
        raise ValidationError('Pooling sigma must be positive')
    if cfg.n_orientations < 2 or cfg.n_orientations % 2:
        raise ValidationError('Opponent orientation channels need an even '
                              'number of orientations, got {}'
                              .format(cfg.n_orientations))
    if not 0 < cfg.dog_center < cfg.dog_surround:
        raise ValidationError('Expected 0 < dog_center < dog_surround')
    if cfg.color_statistic not in (TRACE, VOLUME):
        raise ValidationError('Unknown color statistic {}'
                              .format(cfg.color_statistic))


class FcResult(object):
    """
    Dense Feature Congestion map and its global score

    :param map: ScalarField
    :param features: dict feature name -> normalized, scale collapsed
                     ScalarField
    :param config: FcConfig used
    """

    def __init__(self, map, features=None, config=None):
        self.map = map
        self.score = map.mean()
        self.features = features or {}
        self.config = config

    def __repr__(self):
        return 'FcResult(score={:.6g})'.format(self.score)


def _pool_sigma_px(cfg, deg_per_px):
    return cfg.pool_sigma_deg / deg_per_px


def _color_values(a, b, sigma_px, statistic):
    var_a = local_variance(a, sigma_px)
    var_b = local_variance(b, sigma_px)
    if statistic == TRACE:
        return np.sqrt(var_a + var_b)

    a = a - a.mean()
    b = b - b.mean()
    cov_ab = pool_values(a * b, sigma_px) \
        - pool_values(a, sigma_px) * pool_values(b, sigma_px)
    determinant = np.maximum(var_a * var_b - cov_ab ** 2, 0.)
    return determinant ** 0.25


def _contrast_values(L, sigma_px, cfg):
    dog = pool_values(L, cfg.dog_center) - pool_values(L, cfg.dog_surround)
    return np.sqrt(local_variance(dog, sigma_px))


def _orientation_values(L_field, sigma_px, cfg):
    energies = oriented_energy(L_field, cfg.n_orientations,
                               cfg.orientation_sigma)
    half = cfg.n_orientations // 2
    total = np.zeros(L_field.shape)
    for k in range(half):
        opponent = energies[k].values - energies[k + half].values
        total += local_variance(opponent, sigma_px)
    return np.sqrt(total)


def _level(lab, scale, cfg):
    if not 0 <= scale < cfg.n_scales:
        raise ValidationError('Scale {} outside [0, {})'
                              .format(scale, cfg.n_scales))
    return [gaussian_pyramid(plane, scale + 1)[scale] for plane in lab.planes()]


def color_clutter(lab, scale, cfg=None):
    """
    Local chromatic variability at a pyramid level: square root of the trace
    (or fourth root of the determinant) of the local (a, b) covariance

    :param lab: LabImage
    :param scale: pyramid level
    :param cfg: FcConfig
    :return: non-negative ScalarField at that level
    """
    cfg = cfg or FcConfig()
    _, a, b = _level(lab, scale, cfg)
    sigma_px = _pool_sigma_px(cfg, a.deg_per_px)
    return a.with_values(_color_values(a.values, b.values, sigma_px,
                                       cfg.color_statistic))


def contrast_clutter(lab, scale, cfg=None):
    """
    Local standard deviation of a difference of Gaussians on L at a pyramid
    level

    :param lab: LabImage
    :param scale: pyramid level
    :param cfg: FcConfig
    :return: non-negative ScalarField at that level
    """
    cfg = cfg or FcConfig()
    L, _, _ = _level(lab, scale, cfg)
    sigma_px = _pool_sigma_px(cfg, L.deg_per_px)
    return L.with_values(_contrast_values(L.values, sigma_px, cfg))


def orientation_clutter(lab, scale, cfg=None):
    """
    Local variability of the opponent orientation energies
    (E_0 - E_90, E_45 - E_135 for 4 orientations) at a pyramid level

    :param lab: LabImage
    :param scale: pyramid level
    :param cfg: FcConfig
    :return: non-negative ScalarField at that level
    """
    cfg = cfg or FcConfig()
    L, _, _ = _level(lab, scale, cfg)
    sigma_px = _pool_sigma_px(cfg, L.deg_per_px)
    return L.with_values(_orientation_values(L, sigma_px, cfg))


def feature_scales(lab, cfg=None):
    """
    Per scale feature planes upsampled to full resolution

    :return: dict feature name -> list of ScalarField, one per scale
    """
    cfg = cfg or FcConfig()
    validate_config(cfg)

    pyramids = [gaussian_pyramid(plane, cfg.n_scales) for plane in lab.planes()]
    scales = {feature: [] for feature in FEATURES}

    for k in range(cfg.n_scales):
        L, a, b = (pyramid[k] for pyramid in pyramids)
        sigma_px = _pool_sigma_px(cfg, L.deg_per_px)
        planes = {COLOR: _color_values(a.values, b.values, sigma_px,
                                       cfg.color_statistic),
                  CONTRAST: _contrast_values(L.values, sigma_px, cfg),
                  ORIENTATION: _orientation_values(L, sigma_px, cfg)}
        for feature, values in planes.items():
            level = ScalarField(values, L.deg_per_px)
            scales[feature].append(upsample_to(level, lab.width, lab.height,
                                               2 ** k))
    return scales


def fc_map_from_lab(lab, cfg=None):
    """
    Feature Congestion from CIELab planes: max over scales per feature,
    division by the feature normalizer, weighted sum

    :param lab: LabImage
    :param cfg: FcConfig
    :return: FcResult
    """
    cfg = cfg or FcConfig()
    scales = feature_scales(lab, cfg)

    features = {}
    combined = np.zeros(lab.shape)
    for feature, weight, normalizer in zip(FEATURES,
                                           cfg.feature_weights,
                                           cfg.normalizers):
        collapsed = np.max(np.stack([s.values for s in scales[feature]]),
                           axis=0) / normalizer
        features[feature] = ScalarField(collapsed, lab.deg_per_px)
        combined += weight * collapsed

    return FcResult(ScalarField(combined, lab.deg_per_px), features, cfg)


def fc_map(img, cfg=None):
    """
    Dense Feature Congestion map of an sRGB image

    :param img: RasterImage
    :param cfg: FcConfig
    :return: FcResult, score is the mean of the map
    """
    return fc_map_from_lab(srgb_to_lab(img), cfg)


def masked_mean(values, box=None, mask=None):
    """
    Mean of a 2D array over a box, excluding masked pixels

    :raises EmptyRegionError: if no pixel is left
    """
    values = np.asarray(values)
    keep = np.ones(values.shape, dtype=bool)
    if mask is not None:
        keep &= ~mask.to_array(values.shape)
    if box is not None:
        r0, r1, c0, c1 = box
        values = values[r0:r1, c0:c1]
        keep = keep[r0:r1, c0:c1]
    if not keep.any():
        raise EmptyRegionError('No unmasked pixel left to average')
    return float(values[keep].mean())


def fc_roi_score(result, roi, mask=None):
    """
    Mean of a clutter map over the clipped ROI

    :param result: FcResult (or any object with a `map` ScalarField)
    :param roi: RoiSpec
    :param mask: optional TargetMask excluded from the mean
    :return: float
    """
    field = result.map
    box = roi.box(field.width, field.height, field.deg_per_px)
    return masked_mean(field.values, box, mask)


def fc_target_score(result, mask):
    """ Mean of a clutter map inside the target box """
    if mask.is_empty:
        raise EmptyRegionError('Target mask is empty')
    return masked_mean(result.map.values, mask.box)

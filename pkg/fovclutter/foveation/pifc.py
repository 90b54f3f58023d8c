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

from .pooling import foveate_map
from ..core.fields import ScalarField
from ..periphery.architecture import rasterize
from ..utils.errors import ValidationError, EmptyRegionError, DimensionError
from ..utils.namespace import L1, L2, KL, METRICS, FOVEATED_PLAIN, \
    PLAIN_FOVEATED

DEFAULT_EPSILON = 1e-8


def parse_metric(metric):
    """ Canonical metric name from a case insensitive one """
    canonical = str(metric).upper()
    if canonical not in METRICS:
        raise ValidationError('Unknown distance metric {}, expected one of {}'
                              .format(metric, METRICS))
    return canonical


def distance(plain, foveated, metric, kl_direction=FOVEATED_PLAIN,
             epsilon=DEFAULT_EPSILON):
    """
    Mean pointwise distance between two sets of values

    :param plain: 1D array, unpooled values
    :param foveated: 1D array, pooled values
    :param metric: L1, L2 (root mean square) or KL (mean pointwise
                   contribution of the divergence of the epsilon smoothed,
                   sum normalized values)
    :return: non-negative float
    """
    metric = parse_metric(metric)
    plain = np.asarray(plain, dtype=np.float64)
    foveated = np.asarray(foveated, dtype=np.float64)
    difference = foveated - plain

    if metric == L1:
        return float(np.mean(np.abs(difference)))
    if metric == L2:
        return float(np.sqrt(np.mean(difference ** 2)))

    if kl_direction == FOVEATED_PLAIN:
        p, q = foveated, plain
    elif kl_direction == PLAIN_FOVEATED:
        p, q = plain, foveated
    else:
        raise ValidationError('Unknown KL direction {}'.format(kl_direction))

    p = p + epsilon
    q = q + epsilon
    p = p / p.sum()
    q = q / q.sum()
    return float(max(np.mean(p * np.log(p / q)), 0.))


class PifcResult(object):
    """
    PIFC coefficient with the ROI crops it was computed from

    :param coefficient: float
    :param metric: L1, L2 or KL
    :param roi_plain: ScalarField, ROI crop of the unpooled map
    :param roi_foveated: ScalarField, ROI crop of the pooled map
    :param valid: boolean array over the crop, False on masked pixels
    :param box: (row_start, row_stop, col_start, col_stop) of the crop
    """

    def __init__(self, coefficient, metric, roi_plain, roi_foveated,
                 valid=None, box=None, kl_direction=FOVEATED_PLAIN):
        self.coefficient = coefficient
        self.metric = metric
        self.roi_plain = roi_plain
        self.roi_foveated = roi_foveated
        self.valid = valid if valid is not None \
            else np.ones(roi_plain.shape, dtype=bool)
        self.box = box
        self.kl_direction = kl_direction

    def __repr__(self):
        return 'PifcResult({}={:.6g})'.format(self.metric, self.coefficient)


def pifc_from_maps(plain, foveated, roi, mask=None, metric=L1,
                   kl_direction=FOVEATED_PLAIN, epsilon=DEFAULT_EPSILON):
    """
    PIFC coefficient of an already pooled map

    :param plain: ScalarField
    :param foveated: ScalarField, foveate_map of plain
    :param roi: RoiSpec
    :param mask: optional TargetMask
    :return: PifcResult
    """
    if plain.shape != foveated.shape:
        raise DimensionError('Plain {} and foveated {} maps differ in shape'
                             .format(plain.shape, foveated.shape))

    metric = parse_metric(metric)
    box = roi.box(plain.width, plain.height, plain.deg_per_px)
    r0, r1, c0, c1 = box

    valid = np.ones(plain.shape, dtype=bool)
    if mask is not None:
        valid = ~mask.to_array(plain.shape)
    valid = valid[r0:r1, c0:c1]
    if not valid.any():
        raise EmptyRegionError('Every pixel of {} is masked'.format(roi))

    roi_plain = ScalarField(plain.values[r0:r1, c0:c1], plain.deg_per_px)
    roi_foveated = ScalarField(foveated.values[r0:r1, c0:c1],
                               plain.deg_per_px)
    coefficient = distance(roi_plain.values[valid],
                           roi_foveated.values[valid],
                           metric, kl_direction, epsilon)

    return PifcResult(coefficient, metric, roi_plain, roi_foveated, valid,
                      box, kl_direction)


def pifc(field, arch, fixation, roi, mask=None, metric=L1,
         kl_direction=FOVEATED_PLAIN, epsilon=DEFAULT_EPSILON, raster=None):
    """
    Peripheral Integration Feature Congestion coefficient: pool the map
    through the architecture at the fixation, crop both maps to the ROI and
    average the pointwise distance over the unmasked pixels

    :param field: ScalarField, dense clutter map
    :param arch: PeripheralArchitecture
    :param fixation: (x, y) in pixels
    :param roi: RoiSpec
    :param mask: optional TargetMask
    :param metric: L1, L2 or KL
    :param raster: optional precomputed RasterizedArch for this fixation
    :return: PifcResult
    """
    if raster is None:
        raster = rasterize(arch, field.width, field.height, fixation,
                           field.deg_per_px)
    foveated = foveate_map(field, raster, mask)
    return pifc_from_maps(field, foveated, roi, mask, metric, kl_direction,
                          epsilon)


def pifc_map_export(result):
    """
    Pointwise difference (foveated - plain) over the ROI, masked pixels at 0

    :param result: PifcResult
    :return: ScalarField
    """
    difference = result.roi_foveated.values - result.roi_plain.values
    difference = np.where(result.valid, difference, 0.)
    return result.roi_plain.with_values(difference)

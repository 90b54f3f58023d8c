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
from threading import Lock

import numpy as np

from .pifc import pifc, parse_metric, DEFAULT_EPSILON
from ..clutter.feature_congestion import FcConfig, masked_mean
from ..clutter.models import FeatureCongestionModel
from ..core.pyramid import downsample_half
from ..core.regions import RoiSpec, TargetMask
from ..periphery.architecture import ArchParams, build_architecture, rasterize
from ..utils.errors import ValidationError, InvariantError
from ..utils.general import as_point
from ..utils.logger import get_bistream_logger
from ..utils.namespace import L1, FOVEATED_PLAIN, IMAGE, TARGET, ROI

FoveationConfig = namedtuple('FoveationConfig', ['fc',
                                                 'arch',
                                                 'roi_deg',
                                                 'metric',
                                                 'kl_direction',
                                                 'epsilon',
                                                 'half_resolution',
                                                 'target_side_deg'])
FoveationConfig.__new__.__defaults__ = (FcConfig(),
                                        ArchParams(),
                                        6.,
                                        L1,
                                        FOVEATED_PLAIN,
                                        DEFAULT_EPSILON,
                                        True,
                                        0.)


class FfcScore(namedtuple('FfcScore', ['fc', 'pifc', 'ffc'])):
    """
    Global clutter score, PIFC coefficient and their product
    """
    __slots__ = ()

    @classmethod
    def from_factors(cls, fc, pifc):
        fc = float(fc)
        pifc = float(pifc)
        return cls(fc, pifc, fc * pifc)


def _check_in_bounds(point, width, height, name):
    x, y = as_point(point, name)
    if not (0 <= x <= width - 1 and 0 <= y <= height - 1):
        raise ValidationError('{} ({:g}, {:g}) outside a {}x{} image'
                              .format(name, x, y, width, height))
    return x, y


class FoveatedScorer(object):
    """
    Scores many (fixation, target) pairs on one image: the dense map and the
    peripheral architecture are computed once, rasterizations are cached per
    fixation

    :param model: DenseModel
    :param img: RasterImage at its native resolution
    :param config: FoveationConfig
    :param log_folder: optional folder for debug logs
    """

    def __init__(self, model, img, config=None, log_folder=None):
        self.config = config or FoveationConfig()
        self.model = model
        self.logger = get_bistream_logger(self.__class__.__name__, log_folder)

        self.width = img.width
        self.height = img.height

        if self.config.half_resolution:
            self.factor = 0.5
            self.image = downsample_half(img)
        else:
            self.factor = 1.
            self.image = img

        self.logger.debug('Dense {} map on a {}x{} image at {:g} deg/px'
                          .format(model.name, self.image.width,
                                  self.image.height, self.image.deg_per_px))
        self.map = model.dense_map(self.image)
        if np.any(self.map.values < 0):
            raise InvariantError('Model {} produced negative clutter values'
                                 .format(model.name))

        self.arch = build_architecture(self.config.arch)
        self._rasters = {}
        self._image_score = None
        self._lock = Lock()

    @property
    def deg_per_px(self):
        return self.map.deg_per_px

    def _working_point(self, point, name):
        x, y = _check_in_bounds(point, self.width, self.height, name)
        return x * self.factor, y * self.factor

    def raster(self, fixation):
        """ Cached rasterization at a fixation given in native pixels """
        fixation = self._working_point(fixation, 'Fixation')
        with self._lock:
            raster = self._rasters.get(fixation)
        if raster is None:
            raster = rasterize(self.arch, self.map.width, self.map.height,
                               fixation, self.deg_per_px)
            with self._lock:
                self._rasters[fixation] = raster
        return raster

    def target_mask(self, target):
        target = self._working_point(target, 'Target')
        return TargetMask.around(target, self.config.target_side_deg,
                                 self.deg_per_px, self.map.width,
                                 self.map.height)

    def pifc_result(self, fixation, target, roi_deg=None, metric=None):
        """
        :return: PifcResult in working resolution coordinates
        """
        roi_deg = roi_deg or self.config.roi_deg
        metric = parse_metric(metric or self.config.metric)
        roi = RoiSpec(self._working_point(target, 'Target'), roi_deg)
        return pifc(self.map, self.arch, None, roi,
                    mask=self.target_mask(target),
                    metric=metric,
                    kl_direction=self.config.kl_direction,
                    epsilon=self.config.epsilon,
                    raster=self.raster(fixation))

    def global_score(self, target=None):
        """ Mean of the dense map, target pixels excluded """
        mask = self.target_mask(target) if target is not None else None
        return masked_mean(self.map.values, mask=mask)

    def score(self, fixation, target, roi_deg=None, metric=None):
        """
        :param fixation: (x, y) in native pixels
        :param target: (x, y) in native pixels
        :return: FfcScore
        """
        result = self.pifc_result(fixation, target, roi_deg, metric)
        score = FfcScore.from_factors(self.global_score(target),
                                      result.coefficient)
        self.logger.debug('fixation={} target={} {}'
                          .format(fixation, target, score))
        return score

    def baselines(self, target, roi_deg=None):
        """
        Non foveated scores: the model global score of the image, the mean of
        the dense map over the target box and over the ROI

        :return: dict baseline name -> float
        """
        roi_deg = roi_deg or self.config.roi_deg
        working_target = self._working_point(target, 'Target')
        roi = RoiSpec(working_target, roi_deg)
        box = roi.box(self.map.width, self.map.height, self.deg_per_px)

        # Target box of side 1 deg when no target removal is configured
        side = self.config.target_side_deg or 1.
        target_box = TargetMask.around(working_target, side, self.deg_per_px,
                                       self.map.width, self.map.height)
        if self._image_score is None:
            self._image_score = float(
                self.model.global_score_given_map(self.image, self.map))
        return {IMAGE: self._image_score,
                TARGET: masked_mean(self.map.values, target_box.box),
                ROI: masked_mean(self.map.values, box)}


def foveated_score(model, img, fixation, target, roi_deg=None, metric=None,
                   config=None):
    """
    Foveated score of any dense model: global mean of its map times the PIFC
    coefficient of its map around the target

    :param model: DenseModel
    :param img: RasterImage
    :param fixation: (x, y) in pixels
    :param target: (x, y) in pixels
    :param roi_deg: ROI side in degrees, config value if None
    :param metric: L1, L2 or KL, config value if None
    :param config: FoveationConfig
    :return: FfcScore
    """
    return FoveatedScorer(model, img, config).score(fixation, target,
                                                    roi_deg, metric)


def ffc(img, fixation, target, config=None):
    """
    Foveated Feature Congestion, FC x PIFC

    :param img: RasterImage
    :param fixation: (x, y) in pixels
    :param target: (x, y) in pixels
    :param config: FoveationConfig
    :return: FfcScore
    """
    config = config or FoveationConfig()
    model = FeatureCongestionModel(config.fc)
    return foveated_score(model, img, fixation, target, config=config)

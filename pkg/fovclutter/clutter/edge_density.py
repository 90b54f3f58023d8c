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
from skimage.filters import apply_hysteresis_threshold

from ..core.color import srgb_to_gray
from ..core.fields import ScalarField
from ..utils.errors import ValidationError

DEFAULT_LOW = 0.1
DEFAULT_HIGH = 0.3


def _forward_gradient_magnitude(gray):
    gx = np.diff(gray, axis=1, append=gray[:, -1:])
    gy = np.diff(gray, axis=0, append=gray[-1:, :])
    return np.hypot(gx, gy)


def edge_map(img, low=DEFAULT_LOW, high=DEFAULT_HIGH):
    """
    Binary edges from a hysteresis threshold on the forward difference
    gradient magnitude, thresholds relative to its maximum

    :param img: RasterImage
    :return: boolean 2D array
    """
    if not 0 <= low <= high:
        raise ValidationError('Expected 0 <= low <= high, got {}, {}'
                              .format(low, high))

    magnitude = _forward_gradient_magnitude(srgb_to_gray(img))
    peak = magnitude.max()
    if peak <= 0:
        return np.zeros(magnitude.shape, dtype=bool)
    return apply_hysteresis_threshold(magnitude, low * peak, high * peak)


def edge_density_score(img, low=DEFAULT_LOW, high=DEFAULT_HIGH):
    """ Fraction of edge pixels, in [0,1] """
    return float(edge_map(img, low, high).mean())


def edge_density_dense(img):
    """
    Gradient magnitude of the grayscale image, central differences

    :param img: RasterImage
    :return: non-negative ScalarField
    """
    gray = srgb_to_gray(img)
    gy, gx = np.gradient(gray)
    return ScalarField(np.hypot(gx, gy), img.deg_per_px)

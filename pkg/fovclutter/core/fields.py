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

from ..utils.errors import ValidationError, DimensionError


def _check_deg_per_px(deg_per_px):
    if not (np.isfinite(deg_per_px) and deg_per_px > 0):
        raise ValidationError('deg_per_px must be positive, got {}'
                              .format(deg_per_px))
    return float(deg_per_px)


def _frozen(array):
    array = np.array(array, dtype=np.float64, copy=True)
    array.setflags(write=False)
    return array


class ScalarField(object):
    """
    A row-major 2D grid of reals with its sampling density in degrees of
    visual angle per pixel. Values are read-only once the field is built.

    :param values: 2D array-like, shape (height, width)
    :param deg_per_px: degrees of visual angle per pixel
    """

    def __init__(self, values, deg_per_px):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2 or min(values.shape) < 1:
            raise DimensionError('A ScalarField needs a non empty 2D array, '
                                 'got shape {}'.format(values.shape))
        if not np.all(np.isfinite(values)):
            raise ValidationError('ScalarField values must be finite')

        self._values = _frozen(values)
        self.deg_per_px = _check_deg_per_px(deg_per_px)

    @property
    def values(self):
        return self._values

    @property
    def width(self):
        return self._values.shape[1]

    @property
    def height(self):
        return self._values.shape[0]

    @property
    def shape(self):
        return self._values.shape

    def mean(self):
        return float(self._values.mean())

    def with_values(self, values):
        """ A field with the same sampling and new values """
        return ScalarField(values, self.deg_per_px)

    def __repr__(self):
        return 'ScalarField({}x{}, {:g} deg/px)'.format(self.width,
                                                      self.height,
                                                      self.deg_per_px)


class RasterImage(object):
    """
    An sRGB image with channel values in [0,1]

    :param pixels: array of shape (height, width, 3)
    :param deg_per_px: degrees of visual angle per pixel
    """

    def __init__(self, pixels, deg_per_px):
        pixels = np.asarray(pixels, dtype=np.float64)
        if pixels.ndim != 3 or pixels.shape[2] != 3 \
                or pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise DimensionError('A RasterImage needs an array of shape '
                                 '(height, width, 3), got {}'
                                 .format(pixels.shape))
        if not np.all(np.isfinite(pixels)) \
                or pixels.min() < 0. or pixels.max() > 1.:
            raise ValidationError('RasterImage channel values must lie in [0,1]')

        self._pixels = _frozen(pixels)
        self.deg_per_px = _check_deg_per_px(deg_per_px)

    @property
    def pixels(self):
        return self._pixels

    @property
    def width(self):
        return self._pixels.shape[1]

    @property
    def height(self):
        return self._pixels.shape[0]

    def channel(self, i):
        return ScalarField(self._pixels[:, :, i], self.deg_per_px)

    def __repr__(self):
        return 'RasterImage({}x{}, {:g} deg/px)'.format(self.width,
                                                      self.height,
                                                      self.deg_per_px)


class LabImage(object):
    """
    CIELab planes sharing dimensions and sampling

    :param L: ScalarField, lightness in [0,100]
    :param a: ScalarField
    :param b: ScalarField
    """

    def __init__(self, L, a, b):
        if not (L.shape == a.shape == b.shape):
            raise DimensionError('Lab planes differ in shape: {}, {}, {}'
                                 .format(L.shape, a.shape, b.shape))
        if not (L.deg_per_px == a.deg_per_px == b.deg_per_px):
            raise ValidationError('Lab planes differ in deg_per_px')
        self.L = L
        self.a = a
        self.b = b

    @classmethod
    def from_array(cls, lab, deg_per_px):
        lab = np.asarray(lab, dtype=np.float64)
        return cls(*(ScalarField(lab[:, :, i], deg_per_px) for i in range(3)))

    def to_array(self):
        return np.stack([self.L.values, self.a.values, self.b.values], axis=-1)

    @property
    def deg_per_px(self):
        return self.L.deg_per_px

    @property
    def width(self):
        return self.L.width

    @property
    def height(self):
        return self.L.height

    @property
    def shape(self):
        return self.L.shape

    def planes(self):
        return self.L, self.a, self.b

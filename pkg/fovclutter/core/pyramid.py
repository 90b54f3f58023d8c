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
from scipy import ndimage, signal

from .fields import ScalarField, RasterImage
from ..utils.errors import DimensionError, ValidationError

BINOMIAL_KERNEL = np.array([1., 4., 6., 4., 1.]) / 16.
POOL_TRUNCATE = 4.
# Pooling windows at least this wide go through an FFT convolution
FFT_MIN_SIGMA = 8.


def _blur_axis(values, axis):
    blurred = ndimage.correlate1d(values, BINOMIAL_KERNEL, axis=axis,
                                  mode='constant', cval=0.)
    # Kernel mass that falls inside the plane, per position
    mass = ndimage.correlate1d(np.ones(values.shape[axis]), BINOMIAL_KERNEL,
                               mode='constant', cval=0.)
    shape = [1, 1]
    shape[axis] = -1
    return blurred / mass.reshape(shape)


def blur(values):
    """
    Separable binomial blur with borders renormalized by the kernel mass
    inside the plane, so that constants are preserved

    :param values: 2D array
    :return: 2D array
    """
    return _blur_axis(_blur_axis(np.asarray(values, dtype=np.float64), 0), 1)


def reduce(values):
    """ Blur then keep every other row and column """
    return blur(values)[::2, ::2]


def gaussian_pyramid(field, levels):
    """
    Gaussian pyramid of a scalar field

    :param field: ScalarField, level 0
    :param levels: number of levels including the input
    :return: list of ScalarField, deg_per_px doubling per level
    """
    if levels < 1:
        raise ValidationError('A pyramid needs at least one level, got {}'
                              .format(levels))

    min_size = 2 ** (levels - 1)
    if field.width < min_size or field.height < min_size:
        raise DimensionError('A {}x{} field is too small for {} pyramid levels'
                             .format(field.width, field.height, levels))

    pyramid = [field]
    for _ in range(1, levels):
        previous = pyramid[-1]
        pyramid.append(ScalarField(reduce(previous.values),
                                   2. * previous.deg_per_px))
    return pyramid


def downsample_half(img):
    """
    Halves the resolution of an sRGB image with one pyramid step per channel

    :param img: RasterImage
    :return: RasterImage with twice the deg_per_px
    """
    if img.width < 2 or img.height < 2:
        raise DimensionError('Cannot halve a {}x{} image'
                             .format(img.width, img.height))
    channels = [reduce(img.pixels[:, :, i]) for i in range(3)]
    pixels = np.clip(np.stack(channels, axis=-1), 0., 1.)
    return RasterImage(pixels, 2. * img.deg_per_px)


def upsample_to(field, width, height, factor):
    """
    Bilinear upsampling of a pyramid level back to full resolution: the
    full resolution pixel r samples the level at r / factor

    :param field: ScalarField at some pyramid level
    :param width: full resolution width
    :param height: full resolution height
    :param factor: 2**level
    :return: ScalarField of shape (height, width)
    """
    if factor == 1 and field.shape == (height, width):
        return field

    rows, cols = np.meshgrid(np.arange(height, dtype=np.float64) / factor,
                             np.arange(width, dtype=np.float64) / factor,
                             indexing='ij')
    values = ndimage.map_coordinates(field.values, [rows, cols],
                                     order=1, mode='nearest')
    return ScalarField(values, field.deg_per_px / factor)


def gaussian_kernel(sigma_px, truncate=POOL_TRUNCATE):
    """ Normalized 1D Gaussian taps, radius int(truncate * sigma + 0.5) """
    radius = int(truncate * sigma_px + 0.5)
    x = np.arange(-radius, radius + 1, dtype=np.float64)
    kernel = np.exp(-0.5 * (x / sigma_px) ** 2)
    return kernel / kernel.sum()


def pool_values(values, sigma_px):
    """
    Local Gaussian average with reflected borders over the last two axes, so
    a stack of planes is pooled in one call

    :param values: 2D array or stack of 2D arrays
    :param sigma_px: standard deviation of the pooling window in pixels
    :return: array of the same shape
    """
    values = np.asarray(values, dtype=np.float64)
    if sigma_px <= 0:
        return values
    leading = values.ndim - 2
    if sigma_px < FFT_MIN_SIGMA:
        return ndimage.gaussian_filter(values, [0.] * leading
                                       + [sigma_px, sigma_px],
                                       mode='reflect')

    # Wide windows: one FFT convolution of the symmetrically padded planes
    kernel = gaussian_kernel(sigma_px)
    radius = len(kernel) // 2
    padded = np.pad(values, [(0, 0)] * leading + [(radius, radius)] * 2,
                    mode='symmetric')
    window = np.outer(kernel, kernel).reshape((1,) * leading
                                              + (len(kernel),) * 2)
    return signal.fftconvolve(padded, window, mode='valid', axes=(-2, -1))


def local_variance(values, sigma_px):
    """ Gaussian weighted local variance, clipped at 0 """
    values = np.asarray(values, dtype=np.float64)
    values = values - values.mean()
    mean, mean_square = pool_values(np.stack([values, values * values]),
                                    sigma_px)
    return np.maximum(mean_square - mean * mean, 0.)

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
from scipy import fft

from .fields import ScalarField
from ..utils.errors import ValidationError


def orientations(n_orientations):
    """ Filter orientations in radians, k * pi / n """
    return np.arange(n_orientations) * np.pi / n_orientations


def _transfer(shape, theta, sigma):
    """
    Frequency response of a second derivative of Gaussian along
    d = (cos theta, sin theta) in (column, row) coordinates, scaled to a
    unit peak at |w| = sqrt(2) / sigma, and its one sided (analytic) version
    """
    w_row = 2. * np.pi * fft.fftfreq(shape[0])
    w_col = 2. * np.pi * fft.fftfreq(shape[1])
    w_row, w_col = np.meshgrid(w_row, w_col, indexing='ij')

    projection = w_col * np.cos(theta) + w_row * np.sin(theta)
    radius2 = w_col ** 2 + w_row ** 2
    gain = 0.5 * sigma ** 2 * projection ** 2 \
        * np.exp(1. - 0.5 * sigma ** 2 * radius2)
    return gain * (1. + np.sign(projection))


def oriented_responses(luminance, n_orientations=4, sigma=2.):
    """
    Quadrature pair responses of an oriented band-pass filter bank

    :param luminance: ScalarField
    :param n_orientations: number of orientations, at least 2
    :param sigma: filter scale in pixels
    :return: list of (even, odd) ScalarField pairs, one per orientation
    """
    if n_orientations < 2:
        raise ValidationError('At least 2 orientations are needed, got {}'
                              .format(n_orientations))
    if sigma <= 0:
        raise ValidationError('Filter sigma must be positive, got {}'
                              .format(sigma))

    pad = int(np.ceil(4. * sigma))
    padded = np.pad(luminance.values, pad, mode='symmetric')
    spectrum = fft.fft2(padded)

    height, width = luminance.shape
    crop = (slice(pad, pad + height), slice(pad, pad + width))

    responses = []
    for theta in orientations(n_orientations):
        analytic = fft.ifft2(spectrum * _transfer(padded.shape, theta, sigma))
        analytic = analytic[crop]
        responses.append((luminance.with_values(analytic.real),
                          luminance.with_values(analytic.imag)))
    return responses


def oriented_energy(luminance, n_orientations=4, sigma=2.):
    """
    Phase invariant oriented energy, even^2 + odd^2 per orientation

    :param luminance: ScalarField
    :param n_orientations: number of orientations, at least 2
    :param sigma: filter scale in pixels
    :return: list of non-negative ScalarField
    """
    return [even.with_values(even.values ** 2 + odd.values ** 2)
            for even, odd in oriented_responses(luminance,
                                                n_orientations,
                                                sigma)]

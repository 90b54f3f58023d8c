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
from scipy.stats import entropy

from ..core.color import srgb_to_lab
from ..core.fields import ScalarField
from ..core.filters import oriented_responses
from ..core.pyramid import gaussian_pyramid, upsample_to

MIN_RANGE = 1e-8


def histogram_entropy(values, bins=256):
    """
    Shannon entropy in bits of the binned values, 0 for flat subbands
    """
    values = np.ravel(values)
    if values.size == 0 or np.ptp(values) < MIN_RANGE:
        return 0.
    counts, _ = np.histogram(values, bins=bins)
    return float(entropy(counts, base=2))


def _channel_weights(chroma_weight):
    return 1., chroma_weight, chroma_weight


def subband_entropies(lab, n_scales=3, n_orientations=4, sigma=2., bins=256):
    """
    Entropy of every subband of every Lab channel

    :return: array of shape (3, n_scales, n_orientations)
    """
    entropies = np.zeros((3, n_scales, n_orientations))
    for c, plane in enumerate(lab.planes()):
        for s, level in enumerate(gaussian_pyramid(plane, n_scales)):
            for o, (even, _) in enumerate(oriented_responses(level,
                                                             n_orientations,
                                                             sigma)):
                entropies[c, s, o] = histogram_entropy(even.values, bins)
    return entropies


def subband_entropy_from_lab(lab, n_scales=3, n_orientations=4, sigma=2.,
                             chroma_weight=0.08, bins=256):
    entropies = subband_entropies(lab, n_scales, n_orientations, sigma, bins)
    weights = np.asarray(_channel_weights(chroma_weight))
    per_channel = entropies.reshape(3, -1).mean(axis=1)
    return float(np.dot(weights, per_channel) / weights.sum())


def subband_entropy_score(img, n_scales=3, n_orientations=4, sigma=2.,
                          chroma_weight=0.08, bins=256):
    """
    Subband Entropy: weighted mean of the subband entropies of the Lab
    channels, luminance weight 1 and chrominance weight chroma_weight

    :param img: RasterImage
    :return: float, bits
    """
    return subband_entropy_from_lab(srgb_to_lab(img), n_scales,
                                    n_orientations, sigma, chroma_weight,
                                    bins)


def subband_energy_from_lab(lab, n_scales=3, n_orientations=4, sigma=2.,
                            chroma_weight=0.08):
    total = np.zeros(lab.shape)
    for plane, weight in zip(lab.planes(), _channel_weights(chroma_weight)):
        if weight == 0:
            continue
        for k, level in enumerate(gaussian_pyramid(plane, n_scales)):
            energy = np.zeros(level.shape)
            for even, odd in oriented_responses(level, n_orientations, sigma):
                energy += even.values ** 2 + odd.values ** 2
            energy = upsample_to(level.with_values(energy),
                                 lab.width, lab.height, 2 ** k)
            total += weight * energy.values
    return ScalarField(np.maximum(total, 0.), lab.deg_per_px)


def subband_energy_dense(img, n_scales=3, n_orientations=4, sigma=2.,
                         chroma_weight=0.08):
    """
    Dense Subband Energy: weighted sum of squared quadrature subband
    coefficients, upsampled to full resolution

    :param img: RasterImage
    :return: non-negative ScalarField
    """
    return subband_energy_from_lab(srgb_to_lab(img), n_scales,
                                   n_orientations, sigma, chroma_weight)

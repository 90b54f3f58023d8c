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

from ..utils.errors import DimensionError


def foveate_map(field, raster, mask=None):
    """
    Peripheral pooling of a dense map: fovea and outside pixels keep their
    value, the pixels of each pooling region take the maximum of the region
    over its unmasked pixels, masked pixels are set to 0

    :param field: ScalarField
    :param raster: RasterizedArch with the same dimensions
    :param mask: optional TargetMask
    :return: ScalarField
    """
    if field.shape != raster.shape:
        raise DimensionError('Map {} and raster {} differ in shape'
                             .format(field.shape, raster.shape))

    values = field.values
    label = raster.label
    masked = mask.to_array(values.shape) if mask is not None \
        else np.zeros(values.shape, dtype=bool)

    pooled = np.array(values, copy=True)
    in_region = label > 0
    if in_region.any():
        contributing = in_region & ~masked
        maxima = np.full(label.max() + 1, -np.inf)
        np.maximum.at(maxima, label[contributing], values[contributing])
        # Regions left without any unmasked pixel
        maxima[np.isneginf(maxima)] = 0.
        pooled[in_region] = maxima[label[in_region]]

    pooled[masked] = 0.
    return field.with_values(pooled)

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

import json
import os

import numpy as np
from PIL import Image
from bokeh.palettes import Viridis256, Category20
from skimage import io as skio
from skimage.color import gray2rgb
from skimage.util import img_as_float, img_as_ubyte

from ..core.fields import RasterImage
from ..utils.errors import DimensionError
from ..utils.namespace import FOVEA, OUTSIDE

HEATMAP_PALETTE = 'Viridis256'


def _palette_to_lut(palette):
    return np.array([[int(c[i:i + 2], 16) for i in (1, 3, 5)]
                     for c in palette], dtype=np.uint8)


VIRIDIS_LUT = _palette_to_lut(Viridis256)
REGION_LUT = _palette_to_lut(Category20[20])


def load_image(path, deg_per_px):
    """
    Reads an 8 or 16 bit raster, grayscale replicated to RGB and alpha dropped

    :param path: image file path
    :param deg_per_px: degrees of visual angle per pixel of the file
    :return: RasterImage
    """
    if not os.path.isfile(path):
        raise FileNotFoundError('No image at {}'.format(path))

    pixels = skio.imread(path)
    if pixels.ndim == 2:
        pixels = gray2rgb(pixels)
    elif pixels.ndim == 3 and pixels.shape[2] == 4:
        pixels = pixels[:, :, :3]
    elif pixels.ndim != 3 or pixels.shape[2] != 3:
        raise DimensionError('Unsupported image shape {} in {}'
                             .format(pixels.shape, path))

    return RasterImage(np.clip(img_as_float(pixels), 0., 1.), deg_per_px)


def save_image(img, path):
    """ Writes a RasterImage as an 8 bit PNG """
    Image.fromarray(img_as_ubyte(img.pixels)).save(path, format='PNG')


def save_heatmap(field, path):
    """
    Renders a ScalarField through a perceptually uniform ramp normalized to
    the field range, with the range recorded in a sidecar JSON

    :param field: ScalarField
    :param path: PNG path, the sidecar is path + '.json'
    :return: dict written to the sidecar
    """
    values = field.values
    low, high = float(values.min()), float(values.max())
    if high > low:
        scaled = (values - low) / (high - low)
    else:
        scaled = np.zeros(values.shape)
    index = np.clip(np.round(scaled * 255), 0, 255).astype(np.uint8)

    Image.fromarray(VIRIDIS_LUT[index]).save(path, format='PNG')

    sidecar = {'min': low,
               'max': high,
               'palette': HEATMAP_PALETTE,
               'width': field.width,
               'height': field.height,
               'deg_per_px': field.deg_per_px}
    with open(path + '.json', 'w') as fid:
        json.dump(sidecar, fid, sort_keys=True, indent=2)
    return sidecar


def save_label_map(raster, path):
    """
    Renders a RasterizedArch: fovea white, outside black, regions cycling
    through a categorical palette
    """
    label = raster.label
    rgb = REGION_LUT[np.mod(np.maximum(label, 1) - 1, len(REGION_LUT))]
    rgb[label == FOVEA] = 255
    rgb[label == OUTSIDE] = 0
    Image.fromarray(rgb).save(path, format='PNG')

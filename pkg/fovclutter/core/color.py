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
from skimage import color

from .fields import RasterImage, LabImage

ILLUMINANT = 'D65'
OBSERVER = '2'


def srgb_to_lab(img):
    """
    Converts an sRGB image to CIELab under the D65 white point

    :param img: RasterImage
    :return: LabImage
    """
    lab = color.rgb2lab(img.pixels, illuminant=ILLUMINANT, observer=OBSERVER)
    return LabImage.from_array(lab, img.deg_per_px)


def lab_to_srgb(lab):
    """
    Converts CIELab planes back to sRGB, clipping out of gamut values

    :param lab: LabImage
    :return: RasterImage
    """
    rgb = color.lab2rgb(lab.to_array(), illuminant=ILLUMINANT, observer=OBSERVER)
    return RasterImage(np.clip(rgb, 0., 1.), lab.deg_per_px)


def srgb_to_gray(img):
    """ Luminance weighted grayscale in [0,1] as a 2D array """
    return color.rgb2gray(img.pixels)

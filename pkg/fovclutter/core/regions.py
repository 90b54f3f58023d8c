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

from ..utils.errors import ValidationError, EmptyRegionError
from ..utils.general import as_point


def square_box(center, side_px, width, height):
    """
    Pixel box of a square of side side_px centered at (x, y), clipped to
    the raster

    :return: (row_start, row_stop, col_start, col_stop), stops exclusive
    """
    x, y = center
    half = side_px / 2.
    c0 = int(np.clip(np.ceil(x - half), 0, width))
    c1 = int(np.clip(np.ceil(x + half), 0, width))
    r0 = int(np.clip(np.ceil(y - half), 0, height))
    r1 = int(np.clip(np.ceil(y + half), 0, height))
    return r0, r1, c0, c1


class RoiSpec(object):
    """
    Square region of interest around a target

    :param center: (x, y) in pixels
    :param side: side length in degrees of visual angle
    """

    def __init__(self, center, side=6.):
        if not side > 0:
            raise ValidationError('ROI side must be positive, got {}'
                                  .format(side))
        self.center = as_point(center, 'ROI center')
        self.side = float(side)

    def box(self, width, height, deg_per_px):
        """
        Clipped pixel box of the ROI

        :raises EmptyRegionError: if the ROI misses the raster
        """
        box = square_box(self.center, self.side / deg_per_px, width, height)
        r0, r1, c0, c1 = box
        if r1 <= r0 or c1 <= c0:
            raise EmptyRegionError('ROI {} does not intersect the {}x{} raster'
                                   .format(self, width, height))
        return box

    def scaled(self, factor):
        """ Same ROI in a raster resampled by factor """
        return RoiSpec((self.center[0] * factor, self.center[1] * factor),
                       self.side)

    def __repr__(self):
        return 'RoiSpec(center=({:g}, {:g}), side={:g} deg)'\
            .format(self.center[0], self.center[1], self.side)


class TargetMask(object):
    """
    Pixels of the target, excluded from pooling maxima and means

    :param box: (row_start, row_stop, col_start, col_stop) or None
    """

    def __init__(self, box=None):
        if box is not None:
            box = tuple(int(b) for b in box)
            r0, r1, c0, c1 = box
            if min(box) < 0:
                raise ValidationError('Negative target box {}'.format(box))
            if r1 <= r0 or c1 <= c0:
                box = None
        self.box = box

    @classmethod
    def empty(cls):
        return cls(None)

    @classmethod
    def around(cls, center, side_deg, deg_per_px, width, height):
        """ Square target box of side side_deg at center, clipped """
        if side_deg is None or side_deg <= 0:
            return cls.empty()
        box = square_box(as_point(center, 'target'), side_deg / deg_per_px,
                         width, height)
        r0, r1, c0, c1 = box
        if r1 <= r0 or c1 <= c0:
            return cls.empty()
        return cls(box)

    @property
    def is_empty(self):
        return self.box is None

    def to_array(self, shape):
        """
        Boolean mask of the target pixels on a raster of the given shape

        :raises ValidationError: if the box exceeds the raster
        """
        mask = np.zeros(shape, dtype=bool)
        if self.box is None:
            return mask
        r0, r1, c0, c1 = self.box
        if r1 > shape[0] or c1 > shape[1]:
            raise ValidationError('Target box {} exceeds a {}x{} raster'
                                  .format(self.box, shape[1], shape[0]))
        mask[r0:r1, c0:c1] = True
        return mask

    def __repr__(self):
        return 'TargetMask({})'.format(self.box)

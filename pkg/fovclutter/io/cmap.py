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

from ..core.fields import ScalarField
from ..utils.errors import ValidationError

MAGIC = b'CMAP'
VERSION = 1

HEADER = np.dtype([('magic', 'S4'),
                   ('version', '<u2'),
                   ('width', '<u4'),
                   ('height', '<u4'),
                   ('reserved', '<u2')])
TRAILER = np.dtype('<f8')
PAYLOAD = np.dtype('<f4')


def save_cmap(field, path):
    """
    Writes a ScalarField as a CMAP file: 16 byte little endian header
    ("CMAP", u16 version, u32 width, u32 height, 2 zero bytes), row-major
    float32 values and a trailing float64 deg_per_px

    :param field: ScalarField
    :param path: output file path
    """
    header = np.zeros(1, dtype=HEADER)
    header['magic'] = MAGIC
    header['version'] = VERSION
    header['width'] = field.width
    header['height'] = field.height

    with open(path, 'wb') as fid:
        header.tofile(fid)
        np.ascontiguousarray(field.values, dtype=PAYLOAD).tofile(fid)
        np.array([field.deg_per_px], dtype=TRAILER).tofile(fid)


def load_cmap(path):
    """
    Reads a CMAP file

    :param path: file path
    :return: ScalarField (float32 precision)
    """
    with open(path, 'rb') as fid:
        blob = fid.read()

    if len(blob) < HEADER.itemsize + TRAILER.itemsize:
        raise ValidationError('{} is too short to be a CMAP file'.format(path))

    header = np.frombuffer(blob, dtype=HEADER, count=1)[0]
    if header['magic'] != MAGIC:
        raise ValidationError('{} is not a CMAP file'.format(path))
    if header['version'] != VERSION:
        raise ValidationError('Unsupported CMAP version {}'
                              .format(header['version']))

    width, height = int(header['width']), int(header['height'])
    expected = HEADER.itemsize + width * height * PAYLOAD.itemsize \
        + TRAILER.itemsize
    if len(blob) != expected:
        raise ValidationError('{} holds {} bytes, {} expected for {}x{}'
                              .format(path, len(blob), expected, width,
                                      height))

    values = np.frombuffer(blob, dtype=PAYLOAD, count=width * height,
                           offset=HEADER.itemsize).reshape(height, width)
    deg_per_px = np.frombuffer(blob, dtype=TRAILER, count=1,
                               offset=expected - TRAILER.itemsize)[0]
    return ScalarField(values.astype(np.float64), float(deg_per_px))

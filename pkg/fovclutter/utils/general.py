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

from .errors import ValidationError


def get_all_subclasses(cls):
    all_subclasses = []

    for subclass in cls.__subclasses__():
        all_subclasses.append(subclass)
        all_subclasses.extend(get_all_subclasses(subclass))

    return all_subclasses


def make_subclasses_dict(cls, key=None):
    """
    Registry of a class hierarchy

    :param cls: base class
    :param key: callable giving the registry key of a class (default __name__)
    :return: dict key -> class, abstract classes without a key excluded
    """
    if key is None:
        key = lambda c: c.__name__

    the_dict = {}
    for x in get_all_subclasses(cls):
        k = key(x)
        if k is not None:
            the_dict[k] = x
    return the_dict


def as_point(value, name='point'):
    """
    Parses an (x, y) pixel coordinate from a sequence or an "x,y" string

    :param value: tuple, list, array or string
    :param name: name used in error messages
    :return: tuple(float, float)
    """
    if isinstance(value, str):
        value = value.split(',')
    try:
        x, y = (float(v) for v in value)
    except (TypeError, ValueError):
        raise ValidationError('{} must be a pair x,y, got {!r}'.format(name, value))

    if not (np.isfinite(x) and np.isfinite(y)):
        raise ValidationError('{} must be finite, got {!r}'.format(name, value))
    return x, y

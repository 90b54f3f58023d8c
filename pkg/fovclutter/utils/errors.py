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


class ValidationError(ValueError):
    """ Invalid parameters or inputs """


class DimensionError(ValidationError):
    """ Array dimensions that do not fit the requested operation """


class EmptyRegionError(ValidationError):
    """ A region of interest without any usable pixel """


class TrialValidationError(ValidationError):
    """
    Trial rows violating the record invariants

    :param rows: list of (line number, reason)
    """

    def __init__(self, rows):
        self.rows = list(rows)
        msg = '; '.join('line {}: {}'.format(l, r) for l, r in self.rows)
        ValidationError.__init__(self, 'Invalid trials ({})'.format(msg))


class MissingImageError(FileNotFoundError):
    """ An image referenced by a trial is not on disk """

    def __init__(self, image_id, path):
        self.image_id = image_id
        FileNotFoundError.__init__(self, 'Image {} not found at {}'.format(image_id, path))


class InvariantError(RuntimeError):
    """ An internal invariant was violated """


class EccentricityWarning(UserWarning):
    """ Trial eccentricity does not match the fixation/target geometry """

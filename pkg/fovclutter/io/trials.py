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

from collections import namedtuple
import os
import warnings

import numpy as np
import pandas as pd

from ..utils.errors import TrialValidationError, EccentricityWarning, \
    MissingImageError

COLUMNS = ['image_id', 'fix_x', 'fix_y', 'tgt_x', 'tgt_y', 'ecc_deg',
           'hit_rate']
NUMERIC_COLUMNS = COLUMNS[1:]

ECCENTRICITY_TOLERANCE = 0.5

TrialRecord = namedtuple('TrialRecord', ['image_id',
                                         'fixation',
                                         'target',
                                         'eccentricity',
                                         'hit_rate'])


def _line(index):
    # Header is line 1
    return int(index) + 2


def load_trials(path, deg_per_px=None, tolerance=ECCENTRICITY_TOLERANCE):
    """
    Reads trial records from a CSV file with header
    image_id,fix_x,fix_y,tgt_x,tgt_y,ecc_deg,hit_rate

    :param path: CSV path
    :param deg_per_px: degrees per pixel of the trial coordinates, enables
                       the eccentricity consistency check
    :param tolerance: eccentricity mismatch in degrees that triggers a warning
    :return: list of TrialRecord
    :raises TrialValidationError: naming the line of every invalid row
    """
    frame = pd.read_csv(path, dtype={'image_id': str})

    missing = [c for c in COLUMNS if c not in frame.columns]
    if missing:
        raise TrialValidationError([(1, 'missing columns {}'
                                     .format(', '.join(missing)))])

    errors = []
    numeric = frame[NUMERIC_COLUMNS].apply(pd.to_numeric, errors='coerce')
    for index, row in numeric.iterrows():
        bad = [c for c in NUMERIC_COLUMNS if not np.isfinite(row[c])]
        if bad:
            errors.append((_line(index), 'unparsable {}'.format(', '.join(bad))))
            continue
        if not 0. <= row['hit_rate'] <= 1.:
            errors.append((_line(index), 'hit_rate {} outside [0,1]'
                           .format(row['hit_rate'])))
        if row['ecc_deg'] < 0:
            errors.append((_line(index), 'negative eccentricity {}'
                           .format(row['ecc_deg'])))

    ids = frame['image_id']
    for index in frame.index[ids.isna() | (ids.astype(str).str.strip() == '')]:
        errors.append((_line(index), 'empty image_id'))

    if errors:
        raise TrialValidationError(sorted(errors))

    if deg_per_px is not None:
        geometric = np.hypot(numeric['fix_x'] - numeric['tgt_x'],
                             numeric['fix_y'] - numeric['tgt_y']) * deg_per_px
        offending = numeric.index[np.abs(geometric - numeric['ecc_deg'])
                                  > tolerance]
        if len(offending):
            warnings.warn('Eccentricity inconsistent with the geometry on '
                          'lines {}'.format(', '.join(str(_line(i))
                                                      for i in offending)),
                          EccentricityWarning)

    return [TrialRecord(image_id=str(frame.at[i, 'image_id']),
                        fixation=(float(row['fix_x']), float(row['fix_y'])),
                        target=(float(row['tgt_x']), float(row['tgt_y'])),
                        eccentricity=float(row['ecc_deg']),
                        hit_rate=float(row['hit_rate']))
            for i, row in numeric.iterrows()]


def trials_to_frame(trials):
    return pd.DataFrame([[t.image_id, t.fixation[0], t.fixation[1],
                          t.target[0], t.target[1], t.eccentricity,
                          t.hit_rate] for t in trials],
                        columns=COLUMNS)


def save_trials(trials, path):
    trials_to_frame(trials).to_csv(path, index=False, float_format='%.6f')


def image_path(image_dir, image_id):
    """
    Path of the image of a trial: image_dir/image_id, adding .png when the
    id has no extension

    :raises MissingImageError: if the file does not exist
    """
    name = image_id if os.path.splitext(image_id)[1] else image_id + '.png'
    path = os.path.join(image_dir, name)
    if not os.path.isfile(path):
        raise MissingImageError(image_id, path)
    return path

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

""" Distance metrics """
L1 = 'L1'
L2 = 'L2'
KL = 'KL'
METRICS = (L1, L2, KL)

""" KL directions """
FOVEATED_PLAIN = 'foveated||plain'
PLAIN_FOVEATED = 'plain||foveated'

""" Color clutter statistics """
TRACE = 'trace'
VOLUME = 'volume'

""" Raster labels """
OUTSIDE = -1
FOVEA = 0

""" Dense models """
FEATURE_CONGESTION = 'feature_congestion'
EDGE_DENSITY = 'edge_density'
SUBBAND_ENERGY = 'subband_energy'

MODEL_ALIASES = {'fc': FEATURE_CONGESTION,
                 'ed': EDGE_DENSITY,
                 'se': SUBBAND_ENERGY}

""" Baseline (non foveated) scores """
IMAGE = 'Image'
TARGET = 'Target'
ROI = 'ROI'
BASELINES = (IMAGE, TARGET, ROI)

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

# Foveated Feature Congestion of a procedural scene
import os

import numpy as np

from fovclutter.analysis import make_scene
from fovclutter.analysis.synthetic import draw_target, ECCENTRICITIES
from fovclutter.clutter import FeatureCongestionModel
from fovclutter.core import RasterImage
from fovclutter.foveation import FoveatedScorer, FoveationConfig, \
    foveate_map
from fovclutter.io import save_heatmap, save_label_map, save_cmap

DEG_PER_PX = 0.044


if __name__ == '__main__':

    os.makedirs('output', exist_ok=True)

    rng = np.random.default_rng(0)
    pixels = make_scene(512, 380, 40, rng)
    target = (80., 190.)
    pixels = draw_target(pixels, target, 0.5 / DEG_PER_PX)
    img = RasterImage(pixels, DEG_PER_PX)

    config = FoveationConfig(roi_deg=6., metric='L1', half_resolution=False)
    scorer = FoveatedScorer(FeatureCongestionModel(), img, config)

    save_cmap(scorer.map, 'output/scene.fc.cmap')
    save_heatmap(scorer.map, 'output/scene.fc.png')

    for e in ECCENTRICITIES:
        fixation = (target[0] + np.round(e / DEG_PER_PX), target[1])
        score = scorer.score(fixation, target)
        print('{:4.0f} deg: FC={:.4f} PIFC={:.4f} FFC={:.4f}'
              .format(e, score.fc, score.pifc, score.ffc))

    # Pooled map and label map for the farthest fixation
    raster = scorer.raster(fixation)
    save_label_map(raster, 'output/scene.regions.png')
    save_heatmap(foveate_map(scorer.map, raster), 'output/scene.foveated.png')

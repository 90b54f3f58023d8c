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

# Dense Edge Density and Subband Energy maps through the same pooling
import numpy as np

from fovclutter.analysis import make_scene
from fovclutter.clutter import make_model
from fovclutter.core import RasterImage
from fovclutter.foveation import foveated_score, FoveationConfig

DEG_PER_PX = 0.044


if __name__ == '__main__':

    rng = np.random.default_rng(1)
    img = RasterImage(make_scene(512, 380, 60, rng), DEG_PER_PX)
    target = (80., 190.)
    config = FoveationConfig(half_resolution=False)

    for name in ('fc', 'ed', 'se'):
        model = make_model(name)
        near = foveated_score(model, img, (102., 190.), target, config=config)
        far = foveated_score(model, img, (420., 190.), target, config=config)
        print('{}: global {:.4f}, PIFC near {:.4f}, far {:.4f}'
              .format(model.name, model.global_score(img), near.pifc,
                      far.pifc))

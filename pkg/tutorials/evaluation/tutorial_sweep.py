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

# Synthetic study, ROI x metric sweep and plots
import os

from fovclutter.analysis import synthetic_study, sweep, ScoreCache
from fovclutter.analysis.stats import format_report
from fovclutter.clutter import make_model
from fovclutter.foveation import FoveationConfig
from fovclutter.utils.namespace import L1
from fovclutter.viz import score_hit_rate_plot, eccentricity_trace_plot

DEG_PER_PX = 0.044


if __name__ == '__main__':

    os.makedirs('output', exist_ok=True)

    model = make_model('fc')
    config = FoveationConfig(half_resolution=False)
    images, trials = synthetic_study(model, n_images=12, width=512,
                                     height=380, deg_per_px=DEG_PER_PX,
                                     config=config, seed=0)

    cache = ScoreCache()
    result = sweep(trials, model, images, config=config, n_bootstrap=10000,
                   seed=0, cache=cache, jobs=4)
    print(result.to_text())
    cache.save('output/scores.h5')

    reports = result.reports.set_index(['row', 'roi_deg'])
    print(format_report(reports.loc[(L1, 6.)]))

    cell = result.scores[(result.scores['metric'] == L1)
                         & (result.scores['roi_deg'] == 6.)]
    score_hit_rate_plot(cell['score'], cell['hit_rate'],
                        filename='output/ffc_hit_rate.html',
                        groups=cell['ecc_deg'])
    eccentricity_trace_plot(cell, filename='output/traces.html')

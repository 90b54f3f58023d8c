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

from bokeh.plotting import figure, output_file, save, ColumnDataSource
from bokeh.palettes import Category10, viridis

import numpy as np


def _palette(n):
    if n <= 10:
        return Category10[10][:n]
    return viridis(n)


def score_hit_rate_plot(scores, hit_rates,
                        filename='scores.html',
                        groups=None,
                        title='',
                        x_label='score',
                        y_label='hit rate',
                        **kwargs):
    """
    Scatter of hit rates against clutter scores, one color per group
    (e.g. eccentricity)

    :param scores: array of scores
    :param hit_rates: array of hit rates
    :param filename: output html file
    :param groups: optional array of group labels
    """
    output_file(filename)

    scores = np.asarray(scores, dtype=np.float64)
    hit_rates = np.asarray(hit_rates, dtype=np.float64)
    if groups is None:
        groups = np.zeros(len(scores))
    groups = np.asarray(groups)
    labels = sorted(set(groups.tolist()))
    palette = _palette(len(labels))

    TOOLTIPS = [
        ("index", "$index"),
        ("(score,hit)", "($x, $y)"),
        ("group", "$name"),
    ]
    p = figure(tooltips=TOOLTIPS, title=title, **kwargs)

    for color, label in zip(palette, labels):
        selected = groups == label
        this_src = ColumnDataSource(data=dict(score=scores[selected],
                                              hit_rate=hit_rates[selected]))
        p.scatter(x='score', y='hit_rate', source=this_src, size=8,
                  fill_color=color, line_color=color, name=str(label),
                  legend_label=str(label))

    p.legend.click_policy = "hide"
    p.xaxis.axis_label = x_label
    p.yaxis.axis_label = y_label
    save(p)
    return p


def eccentricity_trace_plot(data,
                            filename='eccentricity.html',
                            value='score',
                            x_label='eccentricity (deg)',
                            y_label='score',
                            **kwargs):
    """
    One line per image of a score against target eccentricity, plus the mean
    over images

    :param data: DataFrame with columns image_id, ecc_deg and value
    """
    output_file(filename)

    TOOLTIPS = [
        ("index", "$index"),
        ("(ecc,score)", "($x, $y)"),
        ("image", "$name"),
    ]
    p = figure(tooltips=TOOLTIPS, **kwargs)

    for image_id, this_data in data.groupby('image_id'):
        this_data = this_data.sort_values('ecc_deg')
        p.line(this_data['ecc_deg'], this_data[value], line_alpha=0.3,
               name=str(image_id))

    mean = data.groupby('ecc_deg')[value].mean()
    p.line(mean.index.values, mean.values, line_width=3, line_color='black',
           legend_label='mean')

    p.xaxis.axis_label = x_label
    p.yaxis.axis_label = y_label
    save(p)
    return p

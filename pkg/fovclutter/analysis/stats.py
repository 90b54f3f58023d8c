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

import numpy as np

from ..utils.errors import ValidationError

DEFAULT_BOOTSTRAP = 10000
DEFAULT_SEED = 0

CorrelationReport = namedtuple('CorrelationReport', ['r',
                                                     'r_mean',
                                                     'r_std',
                                                     'ci_low',
                                                     'ci_high',
                                                     'p_value',
                                                     'n',
                                                     'df',
                                                     'bootstrap_B',
                                                     'seed'])


def _as_pairs(x, y, min_size):
    x = np.asarray(x, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if x.size != y.size:
        raise ValidationError('Samples differ in size: {} and {}'
                              .format(x.size, y.size))
    if x.size < min_size:
        raise ValidationError('At least {} points are needed, got {}'
                              .format(min_size, x.size))
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValidationError('Samples must be finite')
    return x, y


def _rowwise_pearson(x, y):
    """ Pearson r of every row pair, NaN for constant rows """
    dx = x - x.mean(axis=-1, keepdims=True)
    dy = y - y.mean(axis=-1, keepdims=True)
    sxy = np.sum(dx * dy, axis=-1)
    sxx = np.sum(dx * dx, axis=-1)
    syy = np.sum(dy * dy, axis=-1)
    denominator = np.sqrt(sxx * syy)
    with np.errstate(invalid='ignore', divide='ignore'):
        r = np.where(denominator > 0, sxy / denominator, np.nan)
    return np.clip(r, -1., 1.)


def pearson_r(x, y):
    """
    Sample Pearson correlation

    :param x: at least 3 values, not all equal
    :param y: as many values as x, not all equal
    :return: float in [-1, 1]
    """
    x, y = _as_pairs(x, y, 3)
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise ValidationError('Pearson correlation of a constant sample')
    return float(_rowwise_pearson(x, y))


def bootstrap_correlation(x, y, n_bootstrap=DEFAULT_BOOTSTRAP,
                          seed=DEFAULT_SEED):
    """
    Bootstrap distribution of the Pearson correlation, resampling whole
    (x, y) points, and a one sided permutation p-value for a negative
    correlation

    :param x: scores
    :param y: behavioral values, e.g. hit rates
    :param n_bootstrap: number of resamples and of permutations
    :param seed: seed of the random generator
    :return: CorrelationReport
    """
    x, y = _as_pairs(x, y, 5)
    if int(n_bootstrap) < 1:
        raise ValidationError('n_bootstrap must be at least 1')
    n_bootstrap = int(n_bootstrap)

    r = pearson_r(x, y)
    n = x.size
    rng = np.random.default_rng(seed)

    ix = rng.integers(low=0, high=n, size=(n_bootstrap, n))
    resampled = _rowwise_pearson(x[ix], y[ix])
    # Resamples drawing a single distinct point carry no correlation
    resampled = resampled[np.isfinite(resampled)]
    if resampled.size == 0:
        raise ValidationError('Every bootstrap resample is degenerate')

    permuted = rng.permuted(np.tile(y, (n_bootstrap, 1)), axis=1)
    null = _rowwise_pearson(np.tile(x, (n_bootstrap, 1)), permuted)
    p_value = (1. + np.sum(null <= r)) / (n_bootstrap + 1.)

    ci_low, ci_high = np.percentile(resampled, [2.5, 97.5])

    return CorrelationReport(r=r,
                             r_mean=float(np.mean(resampled)),
                             r_std=float(np.std(resampled)),
                             ci_low=float(ci_low),
                             ci_high=float(ci_high),
                             p_value=float(p_value),
                             n=n,
                             df=n - 2,
                             bootstrap_B=n_bootstrap,
                             seed=seed)


def format_report(report):
    """ One line summary, r(df) = mean +/- bootstrap std """
    return 'r({}) = {:.2f} +/- {:.2f} (bootstrap std), p = {:.4g}'\
        .format(report.df, report.r_mean, report.r_std, report.p_value)

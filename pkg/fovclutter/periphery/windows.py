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

from ..utils.errors import ValidationError


def window_f(x, t0):
    """
    Raised cosine window: cos^2 rising edge on (-(1+t0)/2, (t0-1)/2], unit
    plateau up to (1-t0)/2 and cos^2 falling edge down to 0 at (1+t0)/2

    :param x: real or array, position in window widths from the center
    :param t0: transition width in (0,1]
    :return: window value(s) in [0,1]
    """
    if not 0. < t0 <= 1.:
        raise ValidationError('t0 must lie in (0,1], got {}'.format(t0))

    x = np.asarray(x, dtype=np.float64)
    rising = (x > -(1. + t0) / 2.) & (x <= (t0 - 1.) / 2.)
    plateau = (x > (t0 - 1.) / 2.) & (x <= (1. - t0) / 2.)
    falling = (x > (1. - t0) / 2.) & (x <= (1. + t0) / 2.)

    value = np.select(
        [rising, plateau, falling],
        [np.cos(np.pi / 2. * (x - (t0 - 1.) / 2.) / t0) ** 2,
         1.,
         1. - np.cos(np.pi / 2. * (x - (1. + t0) / 2.) / t0) ** 2],
        default=0.)

    if value.ndim == 0:
        return float(value)
    return value


def wrap_angle(d):
    """ Maps angular differences into (-pi, pi] """
    return -(np.mod(np.pi - np.asarray(d, dtype=np.float64), 2. * np.pi)
             - np.pi)


def angular_width(params):
    n_theta, _ = derived_counts(params)
    return 2. * np.pi / n_theta


def log_eccentricity_width(params):
    _, n_e = derived_counts(params)
    return (np.log(params.e_r) - np.log(params.e_0)) / n_e


def angular_center(n, params):
    w_theta = angular_width(params)
    return w_theta * n + w_theta / 2. + params.rotation


def log_eccentricity_center(n, params):
    return np.log(params.e_0) + log_eccentricity_width(params) * (n + 1)


def h_window(theta, n, params):
    """
    Polar angle window of index n

    :param theta: polar angle(s) in radians
    :param n: angular index, 0 <= n < N_theta
    :param params: ArchParams
    :return: window value(s)
    """
    d = wrap_angle(np.asarray(theta) - angular_center(n, params))
    return window_f(d / angular_width(params), params.t_0)


def g_window(e, n, params):
    """
    Log eccentricity window of index n

    :param e: eccentricity(ies) in degrees, > 0
    :param n: eccentricity index, 0 <= n < N_e
    :param params: ArchParams
    :return: window value(s)
    """
    e = np.asarray(e, dtype=np.float64)
    if np.any(e <= 0):
        raise ValidationError('Eccentricities must be positive')
    x = (np.log(e) - log_eccentricity_center(n, params)) \
        / log_eccentricity_width(params)
    return window_f(x, params.t_0)


def derived_counts(params):
    """
    Number of angular and eccentricity windows: round(2 pi / s) and
    round(ln(e_r / e_0) / s) unless overridden in the parameters
    """
    n_theta = params.n_theta if params.n_theta is not None \
        else int(round(2. * np.pi / params.scale))
    n_e = params.n_e if params.n_e is not None \
        else int(round((np.log(params.e_r) - np.log(params.e_0))
                       / params.scale))
    return max(n_theta, 1), max(n_e, 1)

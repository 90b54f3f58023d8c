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
import pandas as pd

from .windows import derived_counts, angular_width, angular_center, \
    log_eccentricity_width, log_eccentricity_center, window_f, wrap_angle
from ..utils.errors import ValidationError
from ..utils.namespace import FOVEA, OUTSIDE
from ..utils.tabdict import iterable_to_tabdict

ArchParams = namedtuple('ArchParams', ['scale',
                                       'e_r',
                                       'fovea',
                                       'e_0',
                                       't_0',
                                       'n_theta',
                                       'n_e',
                                       'rotation'])
ArchParams.__new__.__defaults__ = (0.25, 24., 2., 0.25, 0.5, None, None, 0.)


PoolingRegion = namedtuple('PoolingRegion', ['id',
                                             'n_theta',
                                             'n_e',
                                             'theta_center',
                                             'theta_width',
                                             'log_e_center',
                                             'log_e_width',
                                             'e_inner',
                                             'e_outer'])


def region_name(n_theta, n_e):
    return 'r_{}_{}'.format(n_theta, n_e)


def validate_params(params):
    if not params.scale > 0:
        raise ValidationError('Scale must be positive, got {}'
                              .format(params.scale))
    if not 0 < params.e_0 < params.fovea < params.e_r:
        raise ValidationError('Expected 0 < e_0 < fovea < e_r, got e_0={}, '
                              'fovea={}, e_r={}'.format(params.e_0,
                                                        params.fovea,
                                                        params.e_r))
    if not 0 < params.t_0 <= 1:
        raise ValidationError('t_0 must lie in (0,1], got {}'
                              .format(params.t_0))
    for count in ('n_theta', 'n_e'):
        value = getattr(params, count)
        if value is not None and int(value) < 1:
            raise ValidationError('{} must be at least 1, got {}'
                                  .format(count, value))


class PeripheralArchitecture(object):
    """
    Log-polar pooling regions outside a central fovea. Regions are separable
    in polar angle and log eccentricity; the ones whose radial support lies
    entirely inside the fovea are left out.
    """

    def __init__(self, params):
        validate_params(params)
        self._params = params
        self._n_theta, self._n_e = derived_counts(params)

        w_theta = angular_width(params)
        w_e = log_eccentricity_width(params)
        reach = (1. + params.t_0) / 2. * w_e

        regions = []
        region_id = FOVEA
        for n_e in range(self._n_e):
            c_e = log_eccentricity_center(n_e, params)
            e_outer = np.exp(c_e + reach)
            if e_outer <= params.fovea:
                continue
            for n_theta in range(self._n_theta):
                region_id += 1
                regions.append(PoolingRegion(id=region_id,
                                             n_theta=n_theta,
                                             n_e=n_e,
                                             theta_center=angular_center(n_theta, params),
                                             theta_width=w_theta,
                                             log_e_center=c_e,
                                             log_e_width=w_e,
                                             e_inner=float(np.exp(c_e - reach)),
                                             e_outer=float(e_outer)))

        self._regions = iterable_to_tabdict(
            regions, key=lambda r: region_name(r.n_theta, r.n_e))
        self._by_id = {r.id: r for r in regions}

    @property
    def params(self):
        return self._params

    @property
    def n_theta(self):
        return self._n_theta

    @property
    def n_e(self):
        return self._n_e

    @property
    def fovea(self):
        return self._params.fovea

    @property
    def regions(self):
        return self._regions

    @property
    def eccentricity_bands(self):
        """ Indices n_e of the retained eccentricity bands """
        return sorted({r.n_e for r in self._regions.values()})

    def region(self, n_theta, n_e):
        return self._regions[region_name(n_theta, n_e)]

    def region_by_id(self, region_id):
        return self._by_id[region_id]

    def __len__(self):
        return len(self._regions)

    def to_frame(self):
        """ Region table, one row per pooling region """
        return pd.DataFrame(list(self._regions.values()),
                            columns=PoolingRegion._fields).set_index('id')

    def to_dict(self):
        return {'params': dict(self._params._asdict()),
                'n_theta': self._n_theta,
                'n_e': self._n_e,
                'n_regions': len(self),
                'regions': [dict(r._asdict()) for r in self._regions.values()]}

    def __repr__(self):
        return 'PeripheralArchitecture(N_theta={}, N_e={}, {} regions)'\
            .format(self._n_theta, self._n_e, len(self))


def build_architecture(params=None):
    """
    Builds the peripheral architecture

    :param params: ArchParams, defaults if None
    :return: PeripheralArchitecture
    """
    if params is None:
        params = ArchParams()
    return PeripheralArchitecture(params)


class RasterizedArch(object):
    """
    Hard assignment of the pixels of a raster to the fovea, one pooling
    region or the outside of the architecture, for a given fixation
    """

    def __init__(self, arch, label, fixation, deg_per_px):
        label = np.asarray(label, dtype=np.int32)
        label.setflags(write=False)
        self.arch = arch
        self.label = label
        self.fixation = fixation
        self.deg_per_px = deg_per_px

    @property
    def width(self):
        return self.label.shape[1]

    @property
    def height(self):
        return self.label.shape[0]

    @property
    def shape(self):
        return self.label.shape

    def region_pixel_counts(self):
        """
        Number of pixels per pooling region present in the raster

        :return: pandas.Series indexed by region id
        """
        ids, counts = np.unique(self.label[self.label > FOVEA],
                                return_counts=True)
        return pd.Series(counts, index=pd.Index(ids, name='id'),
                         name='pixels')

    def band_mean_pixel_counts(self):
        """ Mean pixels per present region, per eccentricity band """
        counts = self.region_pixel_counts()
        bands = [self.arch.region_by_id(i).n_e for i in counts.index]
        return counts.groupby(bands).mean()


def rasterize(arch, width, height, fixation, deg_per_px):
    """
    Labels every pixel of a width x height raster with FOVEA, the id of the
    pooling region of maximal window weight or OUTSIDE

    :param arch: PeripheralArchitecture
    :param width: raster width in pixels
    :param height: raster height in pixels
    :param fixation: (x, y) in pixels
    :param deg_per_px: degrees of visual angle per pixel
    :return: RasterizedArch
    """
    x0, y0 = float(fixation[0]), float(fixation[1])
    if not (0 <= x0 <= width - 1 and 0 <= y0 <= height - 1):
        raise ValidationError('Fixation ({}, {}) outside a {}x{} raster'
                              .format(x0, y0, width, height))
    if not deg_per_px > 0:
        raise ValidationError('deg_per_px must be positive, got {}'
                              .format(deg_per_px))

    params = arch.params
    rows, cols = np.meshgrid(np.arange(height, dtype=np.float64),
                             np.arange(width, dtype=np.float64),
                             indexing='ij')
    dx = cols - x0
    dy = rows - y0
    eccentricity = np.hypot(dx, dy) * deg_per_px
    # Counter-clockwise with the y axis pointing up
    theta = np.mod(np.arctan2(-dy, dx), 2. * np.pi)

    label = np.full((height, width), OUTSIDE, dtype=np.int32)
    foveal = eccentricity <= params.fovea
    label[foveal] = FOVEA

    bands = arch.eccentricity_bands
    peripheral = ~foveal
    if not bands or not peripheral.any():
        return RasterizedArch(arch, label, (x0, y0), deg_per_px)

    e = eccentricity[peripheral]
    t = theta[peripheral]

    w_theta = angular_width(params)
    h = np.stack([window_f(wrap_angle(t - angular_center(n, params)) / w_theta,
                           params.t_0)
                  for n in range(arch.n_theta)])
    # argmax keeps the lowest index on ties
    best_theta = np.argmax(h, axis=0)

    w_e = log_eccentricity_width(params)
    log_e = np.log(e)
    g = np.stack([window_f((log_e - log_eccentricity_center(n, params)) / w_e,
                           params.t_0)
                  for n in bands])
    best_band = np.argmax(g, axis=0)
    covered = g.max(axis=0) > 0

    ids = np.zeros((arch.n_theta, arch.n_e), dtype=np.int32)
    for region in arch.regions.values():
        ids[region.n_theta, region.n_e] = region.id

    band_index = np.asarray(bands)[best_band]
    peripheral_label = np.where(covered, ids[best_theta, band_index], OUTSIDE)
    label[peripheral] = peripheral_label

    return RasterizedArch(arch, label, (x0, y0), deg_per_px)

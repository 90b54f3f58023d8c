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

from abc import ABC, abstractmethod
from collections import namedtuple

from .feature_congestion import FcConfig, fc_map, validate_config
from .edge_density import edge_density_score, edge_density_dense, \
    DEFAULT_LOW, DEFAULT_HIGH
from .subband import subband_entropy_score, subband_energy_dense
from ..utils.errors import ValidationError
from ..utils.general import make_subclasses_dict
from ..utils.namespace import FEATURE_CONGESTION, EDGE_DENSITY, \
    SUBBAND_ENERGY, MODEL_ALIASES


EdgeDensityParameters = namedtuple('EdgeDensityParameters', ['low', 'high'])
EdgeDensityParameters.__new__.__defaults__ = (DEFAULT_LOW, DEFAULT_HIGH)

SubbandEnergyParameters = namedtuple('SubbandEnergyParameters',
                                     ['n_scales',
                                      'n_orientations',
                                      'sigma',
                                      'chroma_weight',
                                      'bins'])
SubbandEnergyParameters.__new__.__defaults__ = (3, 4, 2., 0.08, 256)


class DenseModel(ABC):
    """
    A clutter model with a non-negative pixelwise map, pluggable into the
    foveation pipeline, and a classic global score
    """

    name = None
    Parameters = None

    def __init__(self, parameters=None):
        if parameters is None:
            parameters = self.Parameters()
        elif isinstance(parameters, dict):
            parameters = self.Parameters(**parameters)
        self.parameters = parameters

    @abstractmethod
    def dense_map(self, img):
        """
        :param img: RasterImage
        :return: non-negative ScalarField with the image dimensions
        """

    @abstractmethod
    def global_score(self, img):
        """
        :param img: RasterImage
        :return: float, the non foveated score of the model
        """

    def global_score_given_map(self, img, field):
        """ Global score when the dense map of img is already known """
        return self.global_score(img)

    def to_dict(self):
        return {'model': self.name, 'parameters': dict(self.parameters._asdict())}

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, self.parameters)


class FeatureCongestionModel(DenseModel):

    name = FEATURE_CONGESTION
    Parameters = FcConfig

    def __init__(self, parameters=None):
        DenseModel.__init__(self, parameters)
        validate_config(self.parameters)

    def result(self, img):
        return fc_map(img, self.parameters)

    def dense_map(self, img):
        return self.result(img).map

    def global_score(self, img):
        return self.result(img).score

    def global_score_given_map(self, img, field):
        return field.mean()


class EdgeDensityModel(DenseModel):

    name = EDGE_DENSITY
    Parameters = EdgeDensityParameters

    def dense_map(self, img):
        return edge_density_dense(img)

    def global_score(self, img):
        return edge_density_score(img, self.parameters.low,
                                  self.parameters.high)


class SubbandEnergyModel(DenseModel):
    """
    Dense Subband Energy map with Subband Entropy as its global score
    """

    name = SUBBAND_ENERGY
    Parameters = SubbandEnergyParameters

    def dense_map(self, img):
        p = self.parameters
        return subband_energy_dense(img, p.n_scales, p.n_orientations,
                                    p.sigma, p.chroma_weight)

    def global_score(self, img):
        p = self.parameters
        return subband_entropy_score(img, p.n_scales, p.n_orientations,
                                     p.sigma, p.chroma_weight, p.bins)


def get_model_subclasses():
    return make_subclasses_dict(DenseModel, key=lambda c: c.name)


def make_model(name, parameters=None):
    """
    Instantiates a dense model by name or alias (fc, ed, se)

    :param name: model name
    :param parameters: Parameters namedtuple or dict, defaults if None
    :return: DenseModel
    """
    models = get_model_subclasses()
    name = MODEL_ALIASES.get(name, name)
    try:
        model_class = models[name]
    except KeyError:
        raise ValidationError('Unknown model {}, expected one of {}'
                              .format(name, sorted(models)))
    return model_class(parameters)

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

import copy
import hashlib
import json
import os

import yaml

from ..clutter.feature_congestion import FcConfig, validate_config
from ..clutter.models import make_model
from ..foveation.ffc import FoveationConfig
from ..foveation.pifc import parse_metric
from ..periphery.architecture import ArchParams, validate_params
from ..utils.errors import ValidationError
from ..utils.namespace import FEATURE_CONGESTION, MODEL_ALIASES

DEFAULTS_PATH = os.path.join(os.path.dirname(__file__), 'defaults.yml')
HASH_LENGTH = 16


def load_yaml(path):
    with open(path, 'r') as fid:
        the_dict = yaml.safe_load(fid)
    if the_dict is None:
        return {}
    if not isinstance(the_dict, dict):
        raise ValidationError('{} does not hold a mapping'.format(path))
    return the_dict


def merge(base, override, where='config'):
    """
    Recursive update of base with override; keys unknown to base are
    rejected, None values in override are ignored
    """
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if key not in merged:
            raise ValidationError('Unknown {} key {}'.format(where, key))
        if value is None:
            continue
        if isinstance(merged[key], dict):
            if not isinstance(value, dict):
                raise ValidationError('{}.{} must be a mapping'
                                      .format(where, key))
            merged[key] = merge(merged[key], value, where + '.' + key)
        else:
            merged[key] = value
    return merged


class RunConfig(object):
    """
    Resolved run configuration: packaged defaults < config file < overrides
    """

    def __init__(self, values):
        self.values = values
        self.fc_config()
        self.arch_params()
        self.foveation_config()

    @classmethod
    def resolve(cls, path=None, overrides=None):
        """
        :param path: optional YAML file
        :param overrides: nested dict, typically from command line flags
        :return: RunConfig
        """
        values = load_yaml(DEFAULTS_PATH)
        if path is not None:
            values = merge(values, load_yaml(path))
        if overrides:
            values = merge(values, overrides)
        return cls(values)

    def __getitem__(self, key):
        return self.values[key]

    @property
    def deg_per_px(self):
        deg_per_px = float(self.values['deg_per_px'])
        if not deg_per_px > 0:
            raise ValidationError('deg_per_px must be positive, got {}'
                                  .format(deg_per_px))
        return deg_per_px

    @property
    def file_deg_per_px(self):
        """ Sampling of the files on disk: half the operating value when
        images are halved before scoring """
        if self.values['half_resolution']:
            return self.deg_per_px / 2.
        return self.deg_per_px

    def fc_config(self):
        fc = dict(self.values['feature_congestion'])
        fc['feature_weights'] = tuple(float(w) for w in fc['feature_weights'])
        fc['normalizers'] = tuple(float(n) for n in fc['normalizers'])
        cfg = FcConfig(**fc)
        validate_config(cfg)
        return cfg

    def arch_params(self):
        params = ArchParams(**self.values['architecture'])
        validate_params(params)
        return params

    def foveation_config(self):
        foveation = dict(self.values['foveation'])
        foveation['metric'] = parse_metric(foveation['metric'])
        foveation['epsilon'] = float(foveation['epsilon'])
        if not float(foveation['roi_deg']) > 0:
            raise ValidationError('roi_deg must be positive')
        return FoveationConfig(fc=self.fc_config(),
                               arch=self.arch_params(),
                               half_resolution=bool(self.values['half_resolution']),
                               **foveation)

    def model(self, name):
        """ Dense model with the parameters of this configuration """
        name = MODEL_ALIASES.get(name, name)
        if name == FEATURE_CONGESTION:
            return make_model(name, self.fc_config())
        try:
            parameters = self.values[name]
        except KeyError:
            raise ValidationError('Unknown model {}'.format(name))
        return make_model(name, parameters)

    def canonical_json(self):
        return json.dumps(self.values, sort_keys=True, separators=(',', ':'))

    @property
    def hash(self):
        digest = hashlib.sha256(self.canonical_json().encode('utf-8'))
        return digest.hexdigest()[:HASH_LENGTH]

    def to_dict(self):
        return copy.deepcopy(self.values)

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

import hashlib
import json
from collections import OrderedDict
from multiprocessing import Pool
from threading import Lock

import h5py
import numpy as np
import pandas as pd

from .stats import bootstrap_correlation, CorrelationReport, \
    DEFAULT_BOOTSTRAP, DEFAULT_SEED
from ..foveation.ffc import FoveatedScorer, FoveationConfig, FfcScore
from ..foveation.pifc import parse_metric
from ..io.config import HASH_LENGTH
from ..io.images import load_image
from ..io.trials import image_path
from ..utils.errors import MissingImageError, ValidationError
from ..utils.logger import get_bistream_logger
from ..utils.namespace import METRICS, BASELINES

ROI_SIDES = (4., 6., 8., 10., 12.)


def _plain(value):
    if hasattr(value, '_asdict'):
        return {k: _plain(v) for k, v in value._asdict().items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, float, np.integer, np.floating)):
        return float(value)
    return str(value)


def score_fingerprint(model, config, file_deg_per_px=None):
    """
    Hash of everything a cached score depends on besides its key: the model
    parameters, the foveation settings and the sampling of the image files.
    ROI side and metric are part of every key and are left out.

    :param model: DenseModel
    :param config: FoveationConfig
    :param file_deg_per_px: sampling of the files on disk, None in memory
    :return: hex string
    """
    settings = _plain(config._replace(roi_deg=None, metric=None))
    blob = json.dumps({'model': model.name,
                       'parameters': _plain(model.parameters),
                       'foveation': settings,
                       'file_deg_per_px': _plain(file_deg_per_px)},
                      sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(blob.encode('utf-8')).hexdigest()[:HASH_LENGTH]


class ScoreCache(object):
    """
    Foveated scores keyed by (model, image_id, fixation, target, roi, metric),
    safe for concurrent reads and writes from threads. A cache holds the
    scores of a single fingerprint (see score_fingerprint).
    """

    def __init__(self, fingerprint=None):
        self.fingerprint = fingerprint
        self._data = OrderedDict()
        self._lock = Lock()

    @staticmethod
    def key(model, image_id, fixation, target, roi_deg, metric):
        return (str(model), str(image_id),
                float(fixation[0]), float(fixation[1]),
                float(target[0]), float(target[1]),
                float(roi_deg), parse_metric(metric))

    def bind(self, fingerprint):
        """ Binds an unbound cache to a fingerprint, refuses a mismatch """
        with self._lock:
            if self.fingerprint is None:
                self.fingerprint = fingerprint
            elif self.fingerprint != fingerprint:
                raise ValidationError(
                    'Score cache was filled under configuration {}, this '
                    'run uses {}'.format(self.fingerprint, fingerprint))

    def get(self, key):
        with self._lock:
            return self._data.get(key)

    def put(self, key, score):
        with self._lock:
            self._data[key] = FfcScore(*score)

    def __contains__(self, key):
        with self._lock:
            return key in self._data

    def __len__(self):
        return len(self._data)

    def save(self, filename):
        """
        Saves the cache as hdf5 file

        :param filename: string XXX.h5 / XXX.hdf5
        """
        with self._lock:
            keys = list(self._data.keys())
            values = np.array([self._data[k] for k in keys],
                              dtype=np.float64).reshape(-1, 3)

        string_dt = h5py.special_dtype(vlen=str)
        with h5py.File(filename, 'w') as f:
            f.attrs['fingerprint'] = self.fingerprint or ''
            f.create_dataset('models', data=np.array([k[0] for k in keys],
                                                     dtype=object),
                             dtype=string_dt)
            f.create_dataset('image_ids', data=np.array([k[1] for k in keys],
                                                        dtype=object),
                             dtype=string_dt)
            f.create_dataset('metrics', data=np.array([k[7] for k in keys],
                                                      dtype=object),
                             dtype=string_dt)
            f.create_dataset('geometry',
                             data=np.array([k[2:7] for k in keys],
                                           dtype=np.float64).reshape(-1, 5))
            f.create_dataset('scores', data=values)


def _decode(strings):
    return [s.decode('utf-8') if isinstance(s, bytes) else str(s)
            for s in strings]


def load_score_cache(filename):
    with h5py.File(filename, 'r') as f:
        fingerprint = _decode([f.attrs.get('fingerprint', '')])[0]
        models = _decode(f['models'][:])
        image_ids = _decode(f['image_ids'][:])
        metrics = _decode(f['metrics'][:])
        geometry = np.array(f['geometry'][:], dtype=np.float64)
        scores = np.array(f['scores'][:], dtype=np.float64)

    cache = ScoreCache(fingerprint or None)
    for model, image_id, metric, g, s in zip(models, image_ids, metrics,
                                              geometry, scores):
        key = (model, image_id) + tuple(float(v) for v in g) + (metric,)
        cache.put(key, s)
    return cache


class SweepResult(object):
    """
    Correlation reports of a ROI x metric sweep

    :param reports: DataFrame, one row per (metric, roi_deg) cell
    :param baseline_reports: DataFrame, one row per (baseline, roi_deg) cell
    :param scores: DataFrame of per trial scores
    """

    def __init__(self, reports, baseline_reports, scores):
        self.reports = reports
        self.baseline_reports = baseline_reports
        self.scores = scores

    def table(self):
        """ Aligned table, rows metrics then baselines, columns ROI sides """
        frames = [f for f in (self.reports, self.baseline_reports)
                  if f is not None and len(f)]
        long = pd.concat(frames, ignore_index=True)
        cells = long.apply(lambda r: '{:.2f} +/- {:.2f}'.format(r['r_mean'],
                                                               r['r_std']),
                           axis=1)
        long = long.assign(cell=cells)
        table = long.pivot(index='row', columns='roi_deg', values='cell')
        order = [r for r in list(METRICS) + list(BASELINES)
                 if r in table.index]
        table = table.loc[order]
        table.columns = ['{:g} deg'.format(c) for c in table.columns]
        table.index.name = None
        return table

    def to_text(self):
        return self.table().to_string()


def _load(images, image_id, file_deg_per_px):
    if isinstance(images, str):
        return load_image(image_path(images, image_id), file_deg_per_px)
    try:
        return images[image_id]
    except KeyError:
        raise MissingImageError(image_id, '<in memory>')


def _score_image(job):
    """
    Scores every trial of one image for every ROI side and metric

    :return: list of (key, FfcScore), list of baseline rows
    """
    model, image_id, image, trials, roi_sides, metrics, config, \
        missing, baselines, log_folder = job

    scorer = FoveatedScorer(model, image, config, log_folder)
    scored = []
    for trial, roi_deg, metric in missing:
        scored.append(((trial, roi_deg, metric),
                       scorer.score(trial.fixation, trial.target,
                                    roi_deg, metric)))
    baseline_rows = []
    if baselines:
        for index, trial in trials:
            for roi_deg in roi_sides:
                values = scorer.baselines(trial.target, roi_deg)
                baseline_rows.append((index, roi_deg, values))
    return scored, baseline_rows


def _report(values, hits, n_bootstrap, seed, logger, label):
    try:
        return bootstrap_correlation(values, hits, n_bootstrap, seed)
    except ValidationError as e:
        logger.warning('No correlation for {}: {}'.format(label, e))
        n = len(values)
        return CorrelationReport(np.nan, np.nan, np.nan, np.nan, np.nan,
                                 np.nan, n, n - 2, n_bootstrap, seed)


def sweep(trials, model, images, roi_sides=ROI_SIDES, metrics=METRICS,
          config=None, file_deg_per_px=None, n_bootstrap=DEFAULT_BOOTSTRAP,
          seed=DEFAULT_SEED, cache=None, jobs=1, baselines=True,
          log_folder=None):
    """
    Correlation between foveated scores and hit rates for every ROI side and
    distance metric, plus the non foveated baselines

    :param trials: list of TrialRecord
    :param model: DenseModel
    :param images: folder of the image files or mapping image_id -> RasterImage
    :param roi_sides: ROI sides in degrees
    :param metrics: distance metrics
    :param config: FoveationConfig
    :param file_deg_per_px: sampling of the files on disk
    :param n_bootstrap: bootstrap resamples per cell
    :param seed: seed of every cell
    :param cache: optional ScoreCache, filled with the computed scores; a
        cache filled under another fingerprint raises ValidationError
    :param jobs: number of processes scoring images in parallel
    :param baselines: also compute the Image, Target and ROI rows
    :param log_folder: optional folder for debug logs
    :return: SweepResult
    """
    logger = get_bistream_logger('sweep', log_folder)
    config = config or FoveationConfig()
    cache = cache if cache is not None else ScoreCache()
    metrics = [parse_metric(m) for m in metrics]
    roi_sides = [float(r) for r in roi_sides]

    if isinstance(images, str) and file_deg_per_px is None:
        raise ValidationError('file_deg_per_px is needed to read image files')
    cache.bind(score_fingerprint(model, config, file_deg_per_px))

    by_image = OrderedDict()
    for index, trial in enumerate(trials):
        by_image.setdefault(trial.image_id, []).append((index, trial))

    def key_of(trial, roi_deg, metric):
        return ScoreCache.key(model.name, trial.image_id, trial.fixation,
                              trial.target, roi_deg, metric)

    jobs_list = []
    for image_id, image_trials in by_image.items():
        missing = [(t, r, m) for _, t in image_trials for r in roi_sides
                   for m in metrics if key_of(t, r, m) not in cache]
        if not missing and not baselines:
            continue
        image = _load(images, image_id, file_deg_per_px)
        jobs_list.append((model, image_id, image, image_trials, roi_sides,
                          metrics, config, missing, baselines,
                          log_folder))

    logger.info('Scoring {} images ({} trials, {} cached scores)'
                .format(len(jobs_list), len(trials), len(cache)))

    if jobs > 1 and len(jobs_list) > 1:
        with Pool(jobs) as pool:
            outputs = pool.map(_score_image, jobs_list)
    else:
        outputs = [_score_image(job) for job in jobs_list]

    baseline_scores = []
    for scored, baseline_rows in outputs:
        for (trial, roi_deg, metric), score in scored:
            cache.put(key_of(trial, roi_deg, metric), score)
        baseline_scores.extend(baseline_rows)

    hits = np.array([t.hit_rate for t in trials])

    score_rows = []
    report_rows = []
    for metric in metrics:
        for roi_deg in roi_sides:
            values = np.array([cache.get(key_of(t, roi_deg, metric)).ffc
                               for t in trials])
            for t, v in zip(trials, values):
                score_rows.append((t.image_id, t.eccentricity, t.hit_rate,
                                   metric, roi_deg, v))
            report = _report(values, hits, n_bootstrap, seed, logger,
                             '{} {:g} deg'.format(metric, roi_deg))
            report_rows.append(dict(row=metric, roi_deg=roi_deg,
                                    **report._asdict()))

    baseline_report_rows = []
    if baselines:
        lookup = {(i, r): v for i, r, v in baseline_scores}
        for name in BASELINES:
            for roi_deg in roi_sides:
                values = np.array([lookup[(i, roi_deg)][name]
                                   for i in range(len(trials))])
                report = _report(values, hits, n_bootstrap, seed, logger,
                                 '{} {:g} deg'.format(name, roi_deg))
                baseline_report_rows.append(dict(row=name, roi_deg=roi_deg,
                                                 **report._asdict()))

    columns = ['row', 'roi_deg'] + list(CorrelationReport._fields)
    reports = pd.DataFrame(report_rows, columns=columns)
    baseline_reports = pd.DataFrame(baseline_report_rows, columns=columns)
    scores = pd.DataFrame(score_rows, columns=['image_id', 'ecc_deg',
                                               'hit_rate', 'metric',
                                               'roi_deg', 'score'])
    return SweepResult(reports, baseline_reports, scores)

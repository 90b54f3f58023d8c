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

import argparse
import json
import os
import sys

import pandas as pd
import yaml

from .analysis.sweep import sweep, ScoreCache, load_score_cache
from .analysis.synthetic import synthetic_study, ECCENTRICITIES
from .clutter.feature_congestion import fc_map
from .core.pyramid import downsample_half
from .foveation.ffc import FoveatedScorer
from .foveation.pifc import pifc_map_export
from .foveation.pooling import foveate_map
from .io.cmap import save_cmap
from .io.config import RunConfig
from .io.images import load_image, save_image, save_heatmap, save_label_map
from .io.trials import load_trials, save_trials
from .periphery.architecture import build_architecture, rasterize
from .utils.errors import ValidationError, InvariantError
from .utils.general import as_point
from .utils.logger import get_bistream_logger
from .utils.namespace import IMAGE, METRICS

EXIT_OK = 0
EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_INVARIANT = 3


def _point(value):
    try:
        return as_point(value)
    except ValidationError as e:
        raise argparse.ArgumentTypeError(str(e))


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--deg-per-px', type=float, default=None,
                        help='degrees of visual angle per pixel at the '
                             'operating point (default 0.044)')
    common.add_argument('--out', default='.', help='output folder')
    common.add_argument('--config', default=None, help='YAML run config')
    common.add_argument('--seed', type=int, default=None)
    common.add_argument('--jobs', type=int, default=None,
                        help='processes for batch scoring')
    common.add_argument('--format', choices=['json', 'csv'], default='json',
                        help='format of the summary file')
    common.add_argument('--log-dir', default=None,
                        help='write debug logs to this folder')
    resolution = common.add_mutually_exclusive_group()
    resolution.add_argument('--half-res', dest='half_resolution',
                            action='store_true', default=None,
                            help='halve images before scoring (default)')
    resolution.add_argument('--full-res', dest='half_resolution',
                            action='store_false',
                            help='score images at their native size')
    return common


def _foveation_flags(parser, geometry=True):
    if geometry:
        parser.add_argument('--fix', type=_point, required=True,
                            help='fixation x,y in pixels')
        parser.add_argument('--target', type=_point, required=True,
                            help='target x,y in pixels')
    parser.add_argument('--roi-deg', type=float, default=None,
                        help='ROI side in degrees (default 6)')
    parser.add_argument('--metric', type=str.upper, choices=METRICS,
                        default=None)
    parser.add_argument('--target-deg', type=float, default=None,
                        help='side in degrees of the removed target box '
                             '(default 0, no removal)')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='fovclutter',
        description='Foveated visual clutter scores')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    common = _common_parser()

    p = subparsers.add_parser('fc', parents=[common],
                              help='dense Feature Congestion map and score')
    p.add_argument('image')
    p.set_defaults(func=cmd_fc)

    p = subparsers.add_parser('arch', parents=[common],
                              help='peripheral architecture')
    p.add_argument('--width', type=int, default=None,
                   help='render a label map of this width')
    p.add_argument('--height', type=int, default=None)
    p.add_argument('--fix', type=_point, default=None,
                   help='fixation of the label map, default the center')
    p.set_defaults(func=cmd_arch)

    p = subparsers.add_parser('foveate', parents=[common],
                              help='pooled clutter map at a fixation')
    p.add_argument('image')
    p.add_argument('--fix', type=_point, required=True)
    p.add_argument('--model', default='fc')
    p.set_defaults(func=cmd_foveate)

    p = subparsers.add_parser('pifc', parents=[common],
                              help='PIFC coefficient and difference map')
    p.add_argument('image')
    p.add_argument('--model', default='fc')
    _foveation_flags(p)
    p.set_defaults(func=cmd_pifc)

    p = subparsers.add_parser('ffc', parents=[common],
                              help='Foveated Feature Congestion score')
    p.add_argument('image')
    p.add_argument('--maps', action='store_true',
                   help='also write the foveated and PIFC maps')
    _foveation_flags(p)
    p.set_defaults(func=cmd_ffc, model='fc')

    p = subparsers.add_parser('score', parents=[common],
                              help='score of any clutter model')
    p.add_argument('image')
    p.add_argument('--model', choices=['fc', 'ed', 'se'], default='fc')
    p.add_argument('--foveated', action='store_true')
    p.add_argument('--fix', type=_point, default=None)
    p.add_argument('--target', type=_point, default=None)
    _foveation_flags(p, geometry=False)
    p.set_defaults(func=cmd_score)

    for name, func, text in (('eval', cmd_eval, 'correlation with hit rates'),
                             ('sweep', cmd_sweep, 'ROI x metric sweep')):
        p = subparsers.add_parser(name, parents=[common], help=text)
        p.add_argument('trials', help='trials CSV')
        p.add_argument('--images', required=True, help='image folder')
        p.add_argument('--model', choices=['fc', 'ed', 'se'], default='fc')
        p.add_argument('--bootstrap', type=int, default=None,
                       help='bootstrap resamples (default 10000)')
        p.add_argument('--plot', action='store_true',
                       help='write bokeh html plots')
        _foveation_flags(p, geometry=False)
        p.set_defaults(func=func)
    p.add_argument('--cache', default=None,
                   help='HDF5 score cache, read and updated')

    p = subparsers.add_parser('synth', parents=[common],
                              help='synthetic scenes and trials')
    p.add_argument('--model', choices=['fc', 'ed', 'se'], default='fc')
    p.add_argument('--n-images', type=int, default=12)
    p.add_argument('--n-trials', type=int, default=46)
    p.add_argument('--width', type=int, default=1024)
    p.add_argument('--height', type=int, default=760)
    p.add_argument('--alpha', type=float, default=0.8)
    p.add_argument('--sigma', type=float, default=0.05)
    p.set_defaults(func=cmd_synth)

    return parser


def resolve_config(args):
    overrides = {'deg_per_px': args.deg_per_px,
                 'seed': args.seed,
                 'jobs': args.jobs,
                 'half_resolution': args.half_resolution,
                 'bootstrap': getattr(args, 'bootstrap', None),
                 'foveation': {'roi_deg': getattr(args, 'roi_deg', None),
                               'metric': getattr(args, 'metric', None),
                               'target_side_deg': getattr(args, 'target_deg',
                                                          None)}}
    return RunConfig.resolve(args.config, overrides)


def _stem(path):
    return os.path.splitext(os.path.basename(path))[0]


def _output(args, name):
    os.makedirs(args.out, exist_ok=True)
    return os.path.join(args.out, name)


def write_summary(args, config, name, record):
    """
    Writes a summary record as JSON or one row CSV, with the resolved
    config and its hash, and echoes it on stdout
    """
    record = dict(record)
    record['config_hash'] = config.hash
    if args.format == 'csv':
        path = _output(args, name + '.csv')
        pd.DataFrame([record]).to_csv(path, index=False)
    else:
        record['config'] = config.to_dict()
        path = _output(args, name + '.json')
        with open(path, 'w') as fid:
            json.dump(record, fid, sort_keys=True, indent=2)
            fid.write('\n')
    sys.stdout.write(json.dumps({k: v for k, v in record.items()
                                 if k != 'config'}, sort_keys=True) + '\n')
    return path


def _working_image(config, path):
    img = load_image(path, config.file_deg_per_px)
    if config['half_resolution']:
        return downsample_half(img), 0.5
    return img, 1.


def cmd_fc(args, config, logger):
    img, _ = _working_image(config, args.image)
    result = fc_map(img, config.fc_config())
    stem = _stem(args.image)
    save_cmap(result.map, _output(args, stem + '.fc.cmap'))
    save_heatmap(result.map, _output(args, stem + '.fc.png'))
    logger.info('FC score of {}: {:.6g}'.format(args.image, result.score))
    write_summary(args, config, stem + '.fc',
                  {'image': os.path.basename(args.image),
                   'score': result.score,
                   'deg_per_px': config.deg_per_px,
                   'width': result.map.width,
                   'height': result.map.height})


def cmd_arch(args, config, logger):
    arch = build_architecture(config.arch_params())
    summary = arch.to_dict()
    if args.width is not None or args.height is not None:
        if args.width is None or args.height is None:
            raise ValidationError('--width and --height go together')
        fixation = args.fix or ((args.width - 1) / 2., (args.height - 1) / 2.)
        raster = rasterize(arch, args.width, args.height, fixation,
                           config.deg_per_px)
        save_label_map(raster, _output(args, 'arch.png'))
        counts = raster.region_pixel_counts()
        summary['raster'] = {'width': args.width,
                             'height': args.height,
                             'fixation': list(fixation),
                             'regions_present': int(len(counts))}
    logger.info('{}'.format(arch))
    write_summary(args, config, 'arch', summary)


def _scorer(args, config, logger):
    model = config.model(args.model)
    img = load_image(args.image, config.file_deg_per_px)
    return FoveatedScorer(model, img, config.foveation_config(), args.log_dir)


def cmd_foveate(args, config, logger):
    scorer = _scorer(args, config, logger)
    raster = scorer.raster(args.fix)
    foveated = foveate_map(scorer.map, raster)
    stem = _stem(args.image)
    save_cmap(foveated, _output(args, stem + '.foveated.cmap'))
    save_heatmap(foveated, _output(args, stem + '.foveated.png'))
    write_summary(args, config, stem + '.foveated',
                  {'image': os.path.basename(args.image),
                   'model': scorer.model.name,
                   'fixation': list(args.fix),
                   'mean': foveated.mean(),
                   'plain_mean': scorer.map.mean()})


def _pifc_maps(args, scorer, stem):
    result = scorer.pifc_result(args.fix, args.target)
    raster = scorer.raster(args.fix)
    foveated = foveate_map(scorer.map, raster, scorer.target_mask(args.target))
    save_cmap(foveated, _output(args, stem + '.foveated.cmap'))
    save_heatmap(foveated, _output(args, stem + '.foveated.png'))
    difference = pifc_map_export(result)
    save_cmap(difference, _output(args, stem + '.pifc.cmap'))
    save_heatmap(difference, _output(args, stem + '.pifc.png'))
    return result


def cmd_pifc(args, config, logger):
    scorer = _scorer(args, config, logger)
    stem = _stem(args.image)
    result = _pifc_maps(args, scorer, stem)
    fov = config.foveation_config()
    write_summary(args, config, stem + '.pifc',
                  {'image': os.path.basename(args.image),
                   'model': scorer.model.name,
                   'pifc': result.coefficient,
                   'metric': result.metric,
                   'roi_deg': fov.roi_deg,
                   'kl_direction': fov.kl_direction})


def _foveated_record(args, config, scorer):
    fov = config.foveation_config()
    score = scorer.score(args.fix, args.target)
    return {'image': os.path.basename(args.image),
            'model': scorer.model.name,
            'fc': score.fc,
            'pifc': score.pifc,
            'ffc': score.ffc,
            'metric': fov.metric,
            'roi_deg': fov.roi_deg,
            'fixation': list(args.fix),
            'target': list(args.target)}


def cmd_ffc(args, config, logger):
    scorer = _scorer(args, config, logger)
    stem = _stem(args.image)
    if args.maps:
        _pifc_maps(args, scorer, stem)
    write_summary(args, config, stem + '.ffc',
                  _foveated_record(args, config, scorer))


def cmd_score(args, config, logger):
    stem = _stem(args.image)
    if args.foveated:
        if args.fix is None or args.target is None:
            raise ValidationError('--foveated needs --fix and --target')
        scorer = _scorer(args, config, logger)
        record = _foveated_record(args, config, scorer)
    else:
        model = config.model(args.model)
        img, _ = _working_image(config, args.image)
        record = {'image': os.path.basename(args.image),
                  'model': model.name,
                  'score': float(model.global_score(img))}
    write_summary(args, config, '{}.{}'.format(stem, record['model']), record)


def _trials(args, config):
    return load_trials(args.trials, deg_per_px=config.file_deg_per_px)


def _run_sweep(args, config, logger, roi_sides, metrics, cache=None):
    trials = _trials(args, config)
    return trials, sweep(trials, config.model(args.model), args.images,
                         roi_sides=roi_sides,
                         metrics=metrics,
                         config=config.foveation_config(),
                         file_deg_per_px=config.file_deg_per_px,
                         n_bootstrap=config['bootstrap'],
                         seed=config['seed'],
                         cache=cache,
                         jobs=config['jobs'],
                         log_folder=args.log_dir)


def cmd_eval(args, config, logger):
    fov = config.foveation_config()
    trials, result = _run_sweep(args, config, logger, [fov.roi_deg],
                                [fov.metric])
    foveated = result.reports.iloc[0]
    hits = [t.hit_rate for t in trials]
    image_scores = result.baseline_reports
    plain = image_scores[image_scores['row'] == IMAGE].iloc[0]

    result.scores.to_csv(_output(args, 'eval_scores.csv'), index=False)
    if args.plot:
        from .viz.plotting import score_hit_rate_plot
        score_hit_rate_plot(result.scores['score'], hits,
                            filename=_output(args, 'eval.html'),
                            groups=result.scores['ecc_deg'],
                            title='{} {:g} deg'.format(fov.metric,
                                                       fov.roi_deg))

    def as_record(row):
        return {k: (None if pd.isna(row[k]) else float(row[k]))
                for k in ('r', 'r_mean', 'r_std', 'ci_low', 'ci_high',
                          'p_value')}

    logger.info('Foveated r({}) = {:.2f} +/- {:.2f}, plain r = {:.2f} +/- {:.2f}'
                .format(len(trials) - 2, foveated['r_mean'], foveated['r_std'],
                        plain['r_mean'], plain['r_std']))
    write_summary(args, config, 'eval',
                  {'model': config.model(args.model).name,
                   'metric': fov.metric,
                   'roi_deg': fov.roi_deg,
                   'n': len(trials),
                   'df': len(trials) - 2,
                   'bootstrap_B': config['bootstrap'],
                   'seed': config['seed'],
                   'dispersion': 'bootstrap standard deviation',
                   'foveated': as_record(foveated),
                   'plain': as_record(plain)})


def cmd_sweep(args, config, logger):
    cache = load_score_cache(args.cache) \
        if args.cache and os.path.isfile(args.cache) else ScoreCache()
    roi_sides = config['sweep']['roi_sides']
    metrics = config['sweep']['metrics']
    if args.roi_deg is not None:
        roi_sides = [args.roi_deg]
    if args.metric is not None:
        metrics = [args.metric]

    trials, result = _run_sweep(args, config, logger, roi_sides, metrics,
                                cache)
    if args.cache:
        cache.save(args.cache)

    result.reports.to_csv(_output(args, 'sweep.csv'), index=False)
    result.baseline_reports.to_csv(_output(args, 'sweep_baselines.csv'),
                                   index=False)
    with open(_output(args, 'sweep.txt'), 'w') as fid:
        fid.write(result.to_text() + '\n')
    sys.stderr.write(result.to_text() + '\n')

    if args.plot:
        from .viz.plotting import eccentricity_trace_plot
        # Traces of the first cell of the grid
        scores = result.scores
        cell = scores[(scores['metric'] == scores['metric'].iloc[0])
                      & (scores['roi_deg'] == scores['roi_deg'].iloc[0])]
        eccentricity_trace_plot(cell, filename=_output(args, 'sweep.html'))

    write_summary(args, config, 'sweep_summary',
                  {'model': config.model(args.model).name,
                   'cells': int(len(result.reports)),
                   'roi_sides': [float(r) for r in roi_sides],
                   'metrics': list(metrics),
                   'n': len(trials)})


def cmd_synth(args, config, logger):
    model = config.model(args.model)
    images, trials = synthetic_study(model,
                                     n_images=args.n_images,
                                     eccentricities=ECCENTRICITIES,
                                     width=args.width,
                                     height=args.height,
                                     deg_per_px=config.file_deg_per_px,
                                     n_trials=args.n_trials,
                                     alpha=args.alpha,
                                     sigma=args.sigma,
                                     config=config.foveation_config(),
                                     seed=config['seed'],
                                     log_folder=args.log_dir)
    image_dir = _output(args, 'images')
    os.makedirs(image_dir, exist_ok=True)
    for image_id, img in images.items():
        save_image(img, os.path.join(image_dir, image_id + '.png'))
    save_trials(trials, _output(args, 'trials.csv'))
    write_summary(args, config, 'synth',
                  {'model': model.name,
                   'images': len(images),
                   'trials': len(trials),
                   'file_deg_per_px': config.file_deg_per_px})


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logger = get_bistream_logger('fovclutter', args.log_dir)

    try:
        config = resolve_config(args)
        logger.info('config_hash {}'.format(config.hash))
        args.func(args, config, logger)
    except (ValidationError, yaml.YAMLError) as e:
        sys.stderr.write('error: {}\n'.format(e))
        return EXIT_VALIDATION
    except OSError as e:
        sys.stderr.write('error: {}\n'.format(e))
        return EXIT_IO
    except InvariantError as e:
        sys.stderr.write('internal error: {}\n'.format(e))
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())

#
# Copyright (C) 2026 The Undistill Authors
#
# This file is part of Undistill.
#
# Undistill is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Undistill is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with Undistill.  If not, see <http://www.gnu.org/licenses/>.

"""Command line tool.

    undistill analyze FILE
    undistill filter FILE [--side A|B]
    undistill sample D_A D_B D_E N [--workers K]
    undistill example NAME [--d D] [--q Q] [--p P]

Data goes to stdout (or ``--output``) and diagnostics to stderr.  Exit
status is 0 on success, 2 for bad input and 3 for a numerical failure.
"""

import argparse
import logging
import sys
from collections import OrderedDict

import numpy as np

from undistill import __version__
from undistill.cli import emit
from undistill.cli.config import load_config
from undistill.model import channel as channels
from undistill.model import codec
from undistill.model import state as states
from undistill.model.channel import ChoiChannel
from undistill.model.state import DensityMatrix
from undistill.model.state import TripartitePureState
from undistill.protocol import classify
from undistill.protocol import filtering
from undistill.sampling.experiment import EnsembleSpec
from undistill.sampling.experiment import Theorem3Experiment
from undistill.validate.errors import BadInput
from undistill.validate.errors import NonConvergence
from undistill.validate.errors import PreconditionRankNotLow
from undistill.validate.errors import UndistillError
from undistill.validate.matrix import IsBipartite

LOGGER = 'undistill'
LOG_FORMAT = "%(name)s: %(levelname)s: %(message)s"


def _named_state(name, args):
    if name == 'bell':
        return states.bell_state()
    if name == 'ghz':
        return states.ghz_state()
    if name == 'maximally-mixed':
        return states.maximally_mixed(args.d)
    if name == 'bell-e':
        return states.bell_with_environment()
    if name == 'skewed':
        return states.skewed_state(args.p)
    if name == 'werner-holevo':
        return channels.werner_holevo()
    if name == 'wh-choi':
        return channels.werner_holevo().choi
    if name == 'example1':
        return channels.example1_channel(args.d, args.q)
    raise BadInput("Unknown example {0!r}".format(name))


EXAMPLES = ('bell', 'ghz', 'maximally-mixed', 'werner-holevo', 'example1',
            'wh-choi', 'bell-e', 'skewed')


def build_parser():
    parser = argparse.ArgumentParser(
            prog='undistill',
            description="Distillability bounds, local filtering and full "
                        "undistillability checks for low-rank states.")
    parser.add_argument('--version', action='version',
                        version="%(prog)s {0}".format(__version__))
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--rank-tol', type=float, dest='rank_tol',
                        help="relative eigenvalue cutoff for ranks")
    common.add_argument('--ppt-tol', type=float, dest='ppt_tol',
                        help="partial transpose eigenvalues down to -TOL "
                             "count as nonnegative")
    common.add_argument('--seed', type=int, help="seed of every random "
                                                 "sequence")
    common.add_argument('--budget', type=int, dest='witness_budget',
                        help="random trials of the witness search")
    common.add_argument('--format', choices=('json', 'csv', 'pretty'),
                        help="output format")
    common.add_argument('--output', metavar='FILE',
                        help="write data to FILE instead of stdout")
    common.add_argument('--config', action='append', metavar='FILE',
                        help="read this config file instead of searching "
                             "(repeatable)")
    common.add_argument('--no-config', action='store_true', dest='no_config',
                        help="do not search for config files")
    common.add_argument('--verbose', '-v', action='store_true',
                        help="log progress to stderr")

    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    analyze = commands.add_parser(
            'analyze', parents=[common],
            help="classify a state, pure state or channel file")
    analyze.add_argument('file')

    filter_ = commands.add_parser(
            'filter', parents=[common],
            help="filter a state on one side and bound its distillable "
                 "entanglement")
    filter_.add_argument('file')
    filter_.add_argument('--side', default='B', type=str.upper,
                         choices=('A', 'B'))

    sample = commands.add_parser(
            'sample', parents=[common],
            help="Haar-sampling experiment for low-rank states")
    for name in ('d_A', 'd_B', 'd_E', 'n'):
        sample.add_argument(name, type=int)
    sample.add_argument('--workers', type=int, default=1)

    example = commands.add_parser(
            'example', parents=[common],
            help="write a named state or channel as JSON")
    example.add_argument('name', choices=EXAMPLES)
    example.add_argument('--d', type=int, default=2,
                         help="dimension for maximally-mixed and example1")
    example.add_argument('--q', type=float, default=0.5,
                         help="depolarizing strength for example1")
    example.add_argument('--p', type=float, default=0.9,
                         help="weight of |00> for skewed")
    return parser


def get_logger(verbose=False):
    log = logging.getLogger(LOGGER)
    if not log.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        log.addHandler(handler)
        log.propagate = False
    log.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return log


def envelope(command, config, result):
    out = OrderedDict()
    out['command'] = command
    out['version'] = __version__
    out['config'] = config
    out['result'] = result
    return out


def cmd_analyze(args, config, log):
    subject = codec.load(args.file)
    classifier = classify.Classifier.load(config, log)
    result = OrderedDict()
    if isinstance(subject, ChoiChannel):
        result['input'] = codec.CHANNEL
        result['channel'] = classify.analyze_channel(subject, classifier,
                                                     config.rank_tol)
    elif isinstance(subject, TripartitePureState):
        result['input'] = codec.PURE_STATE
        result['distillability'] = classifier(subject)
    else:
        IsBipartite(log)(subject.dims)
        result['input'] = codec.STATE
        result['regime'] = classify.theorem4_decision(
                subject, config.rank_tol, config.ppt_tol)
        result['distillability'] = classifier(
                states.purify(subject, config.rank_tol))
    return envelope('analyze', config, result), None


def _bipartite(subject):
    if isinstance(subject, ChoiChannel):
        return subject.choi
    if isinstance(subject, TripartitePureState):
        return subject.reduced_state([states.A, states.B])
    return subject


def cmd_filter(args, config, log):
    rho = _bipartite(codec.load(args.file))
    IsBipartite(log)(rho.dims)
    outcome = filtering.apply_filter(rho, args.side, config.rank_tol, log)
    notes = []
    try:
        bound = filtering.theorem1_bound(rho, args.side, config.rank_tol)
    except PreconditionRankNotLow as err:
        bound = None
        notes.append("{0}: {1}".format(type(err).__name__, err))
    result = OrderedDict()
    result['outcome'] = outcome
    result['theorem1_bound'] = bound
    result['filtered_hashing_rate'] = filtering.filtered_hashing_rate(
            rho, args.side, config.rank_tol, outcome)
    result['notes'] = notes
    return envelope('filter', config, result), None


def cmd_sample(args, config, log):
    spec = EnsembleSpec(args.d_A, args.d_B, args.d_E, args.n, config.seed,
                        config.rank_tol)
    report = Theorem3Experiment(config.witness_budget, args.workers,
                                log)(spec)
    return envelope('sample', config, report), report


def cmd_example(args, config, log):
    return _named_state(args.name, args), None


COMMANDS = {
    'analyze': cmd_analyze,
    'filter': cmd_filter,
    'sample': cmd_sample,
    'example': cmd_example,
}


def run(args, log):
    overrides = dict((key, getattr(args, key)) for key in (
            'rank_tol', 'ppt_tol', 'seed', 'witness_budget', 'format'))
    config = load_config(args.config, not args.no_config, overrides, log)
    document, table = COMMANDS[args.command](args, config, log)
    if isinstance(document, (DensityMatrix, TripartitePureState,
                             ChoiChannel)):
        text = codec.dumps(document) + '\n'
    else:
        text = emit.render(document, config.format, table)
    emit.write(text, args.output)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    log = get_logger(args.verbose)
    try:
        run(args, log)
    except UndistillError as err:
        log.error("{0}: {1}".format(type(err).__name__, err))
        return err.EXIT_CODE
    except np.linalg.LinAlgError as err:
        log.error("{0}: {1}".format(NonConvergence.__name__, err))
        return NonConvergence.EXIT_CODE
    except OSError as err:
        log.error(str(err))
        return BadInput.EXIT_CODE
    return 0


if __name__ == '__main__':
    sys.exit(main())

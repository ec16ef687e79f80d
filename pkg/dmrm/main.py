# -*- coding: utf-8 -*-

# Licensed to Ecometrica under one or more contributor license
# agreements.  See the NOTICE file distributed with this work
# for additional information regarding copyright ownership.
# Ecometrica licenses this file to you under the Apache
# License, Version 2.0 (the "License"); you may not use this
# file except in compliance with the License.  You may obtain a
# copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied.  See the License for the
# specific language governing permissions and limitations
# under the License.

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

# Quickstart:
#   dmrm blocks --legs 4
#   dmrm rho --legs 2 --rungs 6 --periodic
#   dmrm ggm --legs 3 --rungs 8 --periodic
#   dmrm sweep --legs 2,4 --rungs 4:18:2 --periodic --out results/
#   dmrm verify --legs 2 --rungs 4 --tol 1e-10

import argparse
import io
import logging
import sys
import time

if __name__ == '__main__' and __package__ is None:
    # HACK: Force this to work when called directly
    import dmrm
    __package__ = dmrm.__name__

from .constants import (DEFAULT_SITE_CAP, EXIT_OK, EXIT_RESOURCE_CAP,
                        EXIT_VALIDATION, EXIT_VERIFICATION, LEGS_CAP,
                        VERIFY_TOLERANCE)
from .dm_types import OUTPUT_FORMATS
from .exceptions import (DmrmError, ResourceCapError, ValidationError,
                         VerificationError)
from .utils import format_float


logger = logging.getLogger(__name__)


BOOLEAN_SETTINGS = ('periodic', 'exact')
SETTING_DESTS = {'format': 'output_format', 'tol': 'tolerance'}
TRUE_WORDS = ('1', 'true', 'yes', 'on')
FALSE_WORDS = ('0', 'false', 'no', 'off')


class ArgumentParser(argparse.ArgumentParser):
    """Exits with the validation status on bad arguments."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION,
                  '{0}: error: {1}\n'.format(self.prog, message))


def positive_int_arg(s):
    """Validates integer flags that must be 1 or greater"""
    try:
        result = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid int value: '{0}'".format(s))
    if result <= 0:
        raise argparse.ArgumentTypeError(
            "'{0}' must be 1 or greater".format(s)
        )
    return result


def legs_list_arg(s):
    """Validates --legs for sweeps: M or M1,M2,..."""
    try:
        return [positive_int_arg(part) for part in s.split(',') if part]
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(
            "'{0}' must be a comma-separated list of legs".format(s)
        )


def rungs_range_arg(s):
    """Validates --rungs for sweeps: L or START:END[:STEP]"""
    parts = s.split(':')
    if not 1 <= len(parts) <= 3:
        raise argparse.ArgumentTypeError(
            "'{0}' must be in format: START:END[:STEP]".format(s)
        )
    values = [positive_int_arg(p) for p in parts]
    if len(values) == 1:
        values = values * 2
    if len(values) == 2:
        values.append(1)
    return tuple(values)


def tolerance_arg(s):
    """Validates --tol"""
    try:
        result = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid float value: '{0}'".format(s))
    if not result > 0:
        raise argparse.ArgumentTypeError("'{0}' must be positive".format(s))
    return result


def read_config(path):
    """Reads `key=value` lines; blank lines and `#` comments are skipped."""
    settings = {}
    with io.open(path, encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ValidationError(
                    '{0}:{1}: expected key=value: {2!r}'.format(path, lineno,
                                                                line)
                )
            key, value = (part.strip() for part in line.split('=', 1))
            key = key.lstrip('-').replace('-', '_')
            key = SETTING_DESTS.get(key, key)
            if key in BOOLEAN_SETTINGS:
                if value.lower() in TRUE_WORDS:
                    value = True
                elif value.lower() in FALSE_WORDS:
                    value = False
                else:
                    raise ValidationError(
                        '{0}:{1}: {2} must be true or false: {3!r}'.format(
                            path, lineno, key, value
                        )
                    )
            settings[key] = value
    return settings


def _add_common(parser, legs_type=positive_int_arg, rungs_type=None,
                rungs=True):
    group = parser.add_argument_group(title='Ladder arguments')
    group.add_argument('--legs', type=legs_type, required=True,
                       help='Number of legs M.')
    if rungs:
        group.add_argument('--rungs', type=rungs_type or positive_int_arg,
                           required=True,
                           help='Total number of rungs of the ladder.')
        group.add_argument('--periodic',
                           action='store_const', const=True, default=False,
                           help='Close the ladder along its legs.')
    group = parser.add_argument_group(title='Limits')
    group.add_argument('--oracle-cap', type=positive_int_arg,
                       default=DEFAULT_SITE_CAP,
                       help=('Largest number of spins held in an exact '
                             'state. Defaults to {0}'.format(
                                 DEFAULT_SITE_CAP)))
    group.add_argument('--legs-cap', type=positive_int_arg, default=LEGS_CAP,
                       help=('Largest number of legs. '
                             'Defaults to {0}'.format(LEGS_CAP)))


def build_parser():
    parser = ArgumentParser(
        description=('Reduced density matrices and multipartite '
                     'entanglement of dimer-covering ladder states')
    )
    parser.add_argument('-v', '--verbose', action='count',
                        help='explain what is being done')
    parser.add_argument('--config', metavar='FILE', default=None,
                        help='key=value settings; flags take precedence.')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    blocks = commands.add_parser('blocks', help='Print the block scalars.')
    _add_common(blocks, rungs=False)

    rho = commands.add_parser('rho',
                              help='Print the last two-rung matrix.')
    _add_common(rho)
    rho.add_argument('--out', default=None, metavar='FILE',
                     help='Write the rows to FILE instead of stdout.')

    ggm = commands.add_parser('ggm', help='Print the GGM of one ladder.')
    _add_common(ggm)
    ggm.add_argument('--max-subset', type=positive_int_arg, default=None,
                     help=('Largest window subset. '
                           'Defaults to 2M-1 (2 for one leg)'))
    ggm.add_argument('--exact', action='store_const', const=True,
                     default=False,
                     help='Scan every bipartition of the exact state.')

    sweep = commands.add_parser('sweep', help='Run a GGM scaling sweep.')
    _add_common(sweep, legs_type=legs_list_arg, rungs_type=rungs_range_arg)
    sweep.add_argument('--max-subset', type=positive_int_arg, default=None,
                       help=('Largest window subset. '
                             'Defaults to 2M-1 (2 for one leg)'))
    sweep.add_argument('--jobs', type=positive_int_arg, default=1,
                       help='Parallel workers. Defaults to 1')
    sweep.add_argument('--out', default='.', metavar='DIR',
                       help='Output directory. Defaults to "."')
    sweep.add_argument('--format', dest='output_format',
                       default=OUTPUT_FORMATS.CSV, choices=OUTPUT_FORMATS,
                       help='Row file format. Defaults to "csv"')
    sweep.add_argument('--tol', dest='tolerance', type=tolerance_arg,
                       default=VERIFY_TOLERANCE,
                       help='Numerical tolerance. Defaults to 1e-10')

    verify = commands.add_parser('verify',
                                 help='Check the recursions against the '
                                      'exact state.')
    _add_common(verify)
    verify.add_argument('--tol', dest='tolerance', type=tolerance_arg,
                        default=VERIFY_TOLERANCE,
                        help='Largest entrywise deviation. Defaults to 1e-10')

    return parser, commands.choices


def parse_args(args):
    """Parses command-line `args`, with --config values as defaults"""
    parser, subparsers = build_parser()

    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument('--config', default=None)
    known, _ = pre.parse_known_args(args)
    if known.config is not None:
        try:
            settings = read_config(known.config)
        except (IOError, OSError) as e:
            parser.error('cannot read --config: {0}'.format(e))
        except ValidationError as e:
            parser.error(str(e))
        for subparser in subparsers.values():
            dests = set(a.dest for a in subparser._actions)
            relevant = dict((k, v) for k, v in settings.items() if k in dests)
            for action in subparser._actions:
                if action.dest in relevant:
                    action.required = False
            subparser.set_defaults(**relevant)

    args = parser.parse_args(args=args)

    if getattr(args, 'periodic', False) and args.command in ('rho', 'ggm'):
        if args.rungs % 2:
            parser.error('--periodic needs an even number of rungs')
    return args


def cmd_blocks(args, out):
    from .helpers import block_library
    from .even import run_even_recursion

    library = block_library(args.legs, legs_cap=args.legs_cap)
    scalars = library.scalars
    if not library.even:
        out.write('M={0} Z2={1}\n'.format(args.legs, scalars['Z2']))
        return EXIT_OK
    table = run_even_recursion(library, 1)
    out.write('M={0} A={1} Abar={2} B={3} C={4} D={5} Cbar={6} Dbar={7} '
              'Z1={8} Y1_1={9} Y2_1={10}\n'.format(
                  args.legs, scalars['A'], scalars['Abar'], scalars['B'],
                  scalars['C'], scalars['D'], scalars['Cbar'],
                  scalars['Dbar'], table.Z[1], table.Y1[1], table.Y2[1]))
    out.write('basis={0}\n'.format(len(library.alpha_basis)))
    return EXIT_OK


def _spec(args):
    from .dm_types import LadderSpec
    return LadderSpec(args.legs, args.rungs, args.periodic)


def cmd_rho(args, out):
    from .helpers import two_rung_density

    assembled = two_rung_density(_spec(args), legs_cap=args.legs_cap)
    rho = assembled.rho.normalized()
    lines = [' '.join(format_float(x) for x in row) for row in rho.entries]
    if args.out is None:
        out.write('\n'.join(lines) + '\n')
    else:
        with io.open(args.out, 'w', encoding='utf-8') as f:
            f.write('\n'.join(lines) + '\n')
        logger.info('Wrote {0}'.format(args.out))
    return EXIT_OK


def cmd_ggm(args, out):
    from .entanglement import ggm_exact, ggm_from_window
    from .helpers import two_rung_density
    from .oracle import rvb_literal

    spec = _spec(args)
    if args.exact:
        result = ggm_exact(rvb_literal(spec, cap=args.oracle_cap))
    else:
        assembled = two_rung_density(spec, legs_cap=args.legs_cap)
        result = ggm_from_window(assembled, max_subset=args.max_subset)
    out.write('ggm={0} lambda_sq_max={1} argmax_subset={2}\n'.format(
        format_float(result.ggm), format_float(result.lambda_sq_max),
        result.subset_label
    ))
    return EXIT_OK


def cmd_sweep(args, out):
    from .helpers import RunConfig, run_sweep
    from .storages import save_sweep

    config = RunConfig(legs_list=args.legs, rungs_range=args.rungs,
                       periodic=args.periodic, max_subset=args.max_subset,
                       tolerance=args.tolerance, jobs=args.jobs,
                       out=args.out, output_format=args.output_format,
                       oracle_cap=args.oracle_cap, legs_cap=args.legs_cap)
    started = time.time()
    points = run_sweep(config)
    for path in save_sweep(points, config, wall_time=time.time() - started):
        out.write('{0}\n'.format(path))
    return EXIT_OK


def cmd_verify(args, out):
    from .helpers import verify

    report = verify(args.legs, args.rungs, tolerance=args.tolerance,
                    cap=args.oracle_cap)
    for line in report.lines():
        out.write(line + '\n')
    if not report.passed:
        return EXIT_VERIFICATION
    return EXIT_OK


COMMANDS = {
    'blocks': cmd_blocks,
    'rho': cmd_rho,
    'ggm': cmd_ggm,
    'sweep': cmd_sweep,
    'verify': cmd_verify,
}


def main(args=None, use_logging=True, out=None):
    if args is None:
        args = sys.argv[1:]
    args = parse_args(args=args)
    if out is None:
        out = sys.stdout

    if use_logging:
        configure_logging(args)

    try:
        return COMMANDS[args.command](args, out)
    except ResourceCapError as e:
        sys.stderr.write('error: {0}\n'.format(e))
        return EXIT_RESOURCE_CAP
    except VerificationError as e:
        sys.stderr.write('error: {0}\n'.format(e))
        return EXIT_VERIFICATION
    except DmrmError as e:
        sys.stderr.write('error: {0}\n'.format(e))
        return EXIT_VALIDATION


def configure_logging(args):
    if not args.verbose:
        return

    if args.verbose == 1:
        level = logging.INFO
        fmt = '%(message)s'
    else:
        level = logging.DEBUG
        fmt = '%(asctime)s %(module)s: %(message)s'

    logging.basicConfig(level=level, format=fmt,
                        datefmt='%Y-%m-%d %H:%M:%S')


if __name__ == '__main__':
    retcode = main(args=sys.argv[1:])
    sys.exit(retcode)

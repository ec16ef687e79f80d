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

from collections import namedtuple
import logging
import math
from multiprocessing import Pool
import time

import numpy

from .blocks import build_blocks, window_sites
from .constants import DEFAULT_SITE_CAP, LEGS_CAP, VERIFY_TOLERANCE
from .dm_types import OUTPUT_FORMATS, LadderSpec, SweepRow
from .entanglement import (check_density, default_max_subset,
                           ggm_from_window, negativity, pair_marginal,
                           werner_fit)
from .even import (assemble_rho2_open, assemble_rho2_periodic,
                   run_even_recursion)
from .exceptions import (ParityError, ResourceCapError, SubsetRangeError,
                         ValidationError)
from .lattice import enumerate_coverings
from .odd import (assemble_rho2_open_odd, assemble_rho2_periodic_odd,
                  run_odd_recursion)
from .oracle import literal_coverings, partial_trace, rvb_literal


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


_libraries = {}


def block_library(legs, legs_cap=LEGS_CAP):
    """Returns the cached `BlockLibrary` for `legs`."""
    if legs > legs_cap:
        raise ResourceCapError('legs', legs, legs_cap)
    if legs not in _libraries:
        _libraries[legs] = build_blocks(legs, legs_cap=legs_cap)
    return _libraries[legs]


def two_rung_density(spec, legs_cap=LEGS_CAP):
    """
    Reduced matrix of the last two rungs of the ladder `spec`.

    spec: `LadderSpec`; `spec.rungs` counts every rung of the ladder, the
          recursion runs over the first `spec.rungs - 2`.
    """
    library = block_library(spec.legs, legs_cap=legs_cap)
    n = spec.rungs - 2
    if library.even:
        if n < (2 if spec.periodic else 1):
            raise ValidationError(
                '{0}: too few rungs for the recursion'.format(spec)
            )
        table = run_even_recursion(library, spec.rungs)
        if spec.periodic:
            return assemble_rho2_periodic(library, table, n)
        return assemble_rho2_open(library, table, n)

    if n % 2 or n < 0:
        raise ParityError(
            '{0}: odd ladders need an even number of rungs'.format(spec)
        )
    table = run_odd_recursion(library, n)
    if spec.periodic:
        if n < 2:
            raise ValidationError(
                '{0}: too few rungs for the recursion'.format(spec)
            )
        return assemble_rho2_periodic_odd(library, table, n)
    return assemble_rho2_open_odd(library, table, n)


SweepPoint = namedtuple('SweepPoint', ['row', 'norm', 'seconds'])


def sweep_point(legs, rungs, periodic, max_subset=None, legs_cap=LEGS_CAP):
    """Computes one row of a sweep."""
    started = time.time()
    spec = LadderSpec(legs, rungs, periodic)
    logger.info('Computing {0}'.format(spec))
    assembled = two_rung_density(spec, legs_cap=legs_cap)
    rho = assembled.rho.normalized()
    check_density(rho)

    if max_subset is None:
        max_subset = default_max_subset(legs)
    ggm = ggm_from_window(rho, max_subset=max_subset)
    pair = pair_marginal(rho, legs, kind='chain')
    fit = werner_fit(pair)
    norm = assembled.norm_check
    row = SweepRow(legs=legs, rungs=rungs, periodic=periodic, ggm=ggm.ggm,
                   lambda_sq_max=ggm.lambda_sq_max,
                   argmax_subset=ggm.subset_label, werner_p=fit.p,
                   negativity=negativity(pair), log2_norm=math.log2(norm))
    seconds = time.time() - started
    logger.info('Finished {0} in {1:.3f}s: ggm={2!r}'.format(spec, seconds,
                                                            row.ggm))
    return SweepPoint(row=row, norm=norm, seconds=seconds)


def _sweep_task(args):
    return sweep_point(*args)


def run_sweep(config):
    """Runs every (legs, rungs) point of `config`, in (legs, rungs) order."""
    tasks = [(legs, rungs, config.periodic,
              config.max_subset_for(legs), config.legs_cap)
             for legs in config.legs_list
             for rungs in config.rungs_list]
    logger.info('Sweep of {0} points on {1} job(s)'.format(len(tasks),
                                                          config.jobs))
    if config.jobs > 1 and len(tasks) > 1:
        pool = Pool(processes=config.jobs)
        try:
            points = pool.map(_sweep_task, tasks, chunksize=1)
        finally:
            pool.close()
            pool.join()
    else:
        points = [_sweep_task(t) for t in tasks]
    return sorted(points, key=lambda p: p.row.key)


Check = namedtuple('Check', ['name', 'deviation', 'exact', 'passed'])


class VerificationReport(namedtuple('VerificationReport',
                                    ['legs', 'rungs', 'checks',
                                     'coverings'])):
    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def lines(self):
        yield 'M={0} L={1}'.format(self.legs, self.rungs)
        for check in self.checks:
            yield '{0}: {1} deviation={2:.3e} exact={3}'.format(
                check.name, 'pass' if check.passed else 'FAIL',
                check.deviation, 'yes' if check.exact else 'no'
            )
        for boundary, (literal, full) in sorted(self.coverings.items()):
            yield '{0} coverings: literal={1} full={2}{3}'.format(
                boundary, literal, full,
                '' if literal == full else ' (mismatch)'
            )
        yield 'PASS' if self.passed else 'FAIL'


def compare_with_oracle(spec, tolerance=VERIFY_TOLERANCE,
                        cap=DEFAULT_SITE_CAP):
    """Compares the assembled window of `spec` with the oracle's."""
    assembled = two_rung_density(spec)
    state = rvb_literal(spec, cap=cap)
    keep = window_sites(spec.legs, spec.rungs - 1)
    oracle = partial_trace(state, keep)

    exact = numpy.array_equal(numpy.array(assembled.rho.entries, dtype=object),
                              numpy.array(oracle.entries, dtype=object))
    deviation = float(numpy.abs(assembled.rho.normalized().entries -
                                oracle.normalized().entries).max())
    logger.info('{0}: deviation {1!r}, exact {2}'.format(spec, deviation,
                                                         exact))
    return Check(name=spec.boundary, deviation=deviation, exact=exact,
                 passed=deviation <= tolerance)


def verify(legs, rungs, tolerance=VERIFY_TOLERANCE, cap=DEFAULT_SITE_CAP):
    """
    Checks the recursions of an M-leg, L-rung ladder against the oracle.

    legs: number of legs M.
    rungs: total number of rungs L.
    tolerance: largest entrywise deviation after normalisation.
    cap: largest number of spins the oracle may hold.
    """
    if rungs < 3:
        raise ValidationError(
            'verify needs at least 3 rungs: {0!r}'.format(rungs)
        )
    if legs * rungs > cap:
        raise ResourceCapError('sites', legs * rungs, cap)
    if tolerance <= 0:
        raise ValidationError('tolerance must be positive: {0!r}'.format(
            tolerance
        ))

    specs = []
    if legs % 2 == 0 or rungs % 2 == 0:
        specs.append(LadderSpec(legs, rungs, False))
    if rungs % 2 == 0 and rungs >= 4:
        specs.append(LadderSpec(legs, rungs, True))
    if not specs:
        raise ParityError(
            'no recursion applies to M={0} L={1}'.format(legs, rungs)
        )

    checks = []
    coverings = {}
    for spec in specs:
        checks.append(compare_with_oracle(spec, tolerance, cap))
        coverings[spec.boundary] = (len(literal_coverings(spec)),
                                    len(enumerate_coverings(spec, cap=cap)))
    return VerificationReport(legs=legs, rungs=rungs, checks=checks,
                              coverings=coverings)


class RunConfig(object):
    """
    Validated sweep configuration.

    Each field is cleaned by its ``_clean_<field>`` method, if any.
    """
    FIELDS = ('legs_list', 'rungs_range', 'periodic', 'max_subset',
              'tolerance', 'jobs', 'out', 'output_format', 'oracle_cap',
              'legs_cap')

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(self.FIELDS)
        if unknown:
            raise ValidationError(
                'unknown settings: {0}'.format(', '.join(sorted(unknown)))
            )
        defaults = dict(periodic=False, max_subset=None,
                        tolerance=VERIFY_TOLERANCE, jobs=1, out='.',
                        output_format='csv', oracle_cap=DEFAULT_SITE_CAP,
                        legs_cap=LEGS_CAP)
        defaults.update(kwargs)
        for field in self.FIELDS:
            if field not in defaults:
                raise ValidationError('missing setting: {0}'.format(field))
        # order matters: the rungs range depends on periodic and legs_cap
        for field in ('periodic', 'legs_cap', 'oracle_cap', 'legs_list',
                      'rungs_range', 'max_subset', 'tolerance', 'jobs',
                      'out', 'output_format'):
            value = defaults[field]
            cleaner = getattr(self, '_clean_' + field, None)
            if cleaner is not None:
                value = cleaner(value)
            setattr(self, field, value)

    def __repr__(self):
        return 'RunConfig({0})'.format(', '.join(
            '{0}={1!r}'.format(f, getattr(self, f)) for f in self.FIELDS
        ))

    def as_dict(self):
        return dict((f, getattr(self, f)) for f in self.FIELDS)

    def _clean_periodic(self, value):
        return bool(value)

    def _clean_legs_cap(self, value):
        value = int(value)
        if value < 1:
            raise ValidationError('legs_cap must be 1 or greater: '
                                  '{0!r}'.format(value))
        return value

    def _clean_oracle_cap(self, value):
        value = int(value)
        if value < 2:
            raise ValidationError('oracle_cap must be 2 or greater: '
                                  '{0!r}'.format(value))
        return value

    def _clean_legs_list(self, value):
        legs = sorted(set(int(v) for v in value))
        if not legs:
            raise ValidationError('no legs given')
        for m in legs:
            if m < 1:
                raise ValidationError(
                    'legs must be 1 or greater: {0!r}'.format(m)
                )
            if m > self.legs_cap:
                raise ResourceCapError('legs', m, self.legs_cap)
        return legs

    def _clean_rungs_range(self, value):
        start, end, step = value
        if start < 2 or end < start or step < 1:
            raise ValidationError(
                'invalid rungs range: {0}:{1}:{2}'.format(start, end, step)
            )
        if self.periodic and (step % 2 or start % 2):
            raise ParityError(
                'periodic sweeps need even rungs and an even step: '
                '{0}:{1}:{2}'.format(start, end, step)
            )
        return (start, end, step)

    def _clean_max_subset(self, value):
        if value is None:
            return None
        value = int(value)
        for legs in self.legs_list:
            if not 1 <= value <= 2 * legs:
                raise SubsetRangeError(
                    'max_subset must be between 1 and {0}: {1!r}'.format(
                        2 * legs, value
                    )
                )
        return value

    def _clean_tolerance(self, value):
        value = float(value)
        if not value > 0:
            raise ValidationError(
                'tolerance must be positive: {0!r}'.format(value)
            )
        return value

    def _clean_jobs(self, value):
        value = int(value)
        if value < 1:
            raise ValidationError('jobs must be 1 or greater: {0!r}'.format(
                value
            ))
        return value

    def _clean_output_format(self, value):
        if value not in OUTPUT_FORMATS:
            raise ValidationError(
                'format must be one of: {0}: {1!r}'.format(
                    ', '.join(OUTPUT_FORMATS), value
                )
            )
        return value

    @property
    def rungs_list(self):
        start, end, step = self.rungs_range
        return list(range(start, end + 1, step))

    def max_subset_for(self, legs):
        if self.max_subset is None:
            return default_max_subset(legs)
        return self.max_subset

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

from collections import OrderedDict
from itertools import combinations
import logging

import numexpr
import numpy
from scipy.linalg import eigvalsh

from .constants import (EIGEN_TOLERANCE, EXACT_GGM_CAP, PSD_TOLERANCE,
                        TRACE_TOLERANCE)
from .dm_types import DensityMatrix, GGMResult, WernerFit
from .exceptions import (DimensionError, ResourceCapError, SubsetRangeError,
                         ValidationError)
from .oracle import reduce_density


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def _float_entries(rho):
    if isinstance(rho, DensityMatrix):
        if rho.is_exact:
            rho = rho.normalized()
        entries = rho.entries
    else:
        entries = numpy.asarray(rho, dtype=float)
    entries = numpy.asarray(entries, dtype=float)
    return (entries + entries.T) / 2


def spectrum(rho):
    """Eigenvalues of a symmetric density matrix, ascending."""
    return eigvalsh(_float_entries(rho))


def check_density(rho, psd_tolerance=PSD_TOLERANCE,
                  trace_tolerance=TRACE_TOLERANCE):
    """Raises `ValidationError` unless `rho` is a normalised state."""
    entries = numpy.asarray(rho.entries, dtype=float)
    if not numpy.array_equal(entries, entries.T):
        raise ValidationError('density matrix is not symmetric')
    trace = entries.trace()
    if abs(trace - 1) > trace_tolerance:
        raise ValidationError('trace {0!r} is not 1'.format(trace))
    values = spectrum(rho)
    if values[0] < -psd_tolerance * values[-1]:
        raise ValidationError(
            'negative eigenvalue {0!r} (largest {1!r})'.format(values[0],
                                                               values[-1])
        )
    return values


def default_max_subset(legs):
    window = 2 * legs
    if window == 2:
        return 2
    return window - 1


def ggm_from_window(rho2, max_subset=None, tolerance=EIGEN_TOLERANCE):
    """GGM from the reduced matrices of every subset of the window.

    Subsets run over the window's sites with at most `max_subset`
    members.  Ties within `tolerance` go to the lexicographically smallest
    subset, given as positions in the window.
    """
    density = getattr(rho2, 'rho', rho2)
    if density.is_exact:
        density = density.normalized()
    sites = density.kept_sites
    window = len(sites)
    if max_subset is None:
        max_subset = default_max_subset(window // 2)
    if not 1 <= max_subset <= window:
        raise SubsetRangeError(
            'max_subset must be between 1 and {0}: {1!r}'.format(window,
                                                                max_subset)
        )

    spectra = OrderedDict()
    best, best_subset = None, None
    for size in range(1, max_subset + 1):
        for subset in combinations(range(window), size):
            reduced = reduce_density(density, [sites[i] for i in subset])
            values = spectrum(reduced)
            spectra[subset] = values
            top = values[-1]
            if (best is None or top > best + tolerance or
                    (abs(top - best) <= tolerance and subset < best_subset)):
                best, best_subset = top, subset
    logger.debug('Window GGM over {0} subsets: lambda^2 {1!r} at {2!r}'.format(
        len(spectra), best, best_subset
    ))
    return GGMResult(ggm=1 - best, lambda_sq_max=best,
                     argmax_subset=best_subset, subset_spectra=spectra)


def ggm_exact(state, cap=EXACT_GGM_CAP, tolerance=EIGEN_TOLERANCE):
    """GGM of a pure state over every bipartition of its sites.

    `argmax_subset` is the smaller side of the maximising cut, as site
    labels of the state.
    """
    s = len(state.sites)
    if s > cap:
        raise ResourceCapError('sites', s, cap)
    if s < 2:
        raise ValidationError('need at least two sites: {0!r}'.format(s))
    psi = state.dense()
    psi = psi / numpy.sqrt(psi.dot(psi))
    psi = psi.reshape([2] * s)

    spectra = OrderedDict()
    best, best_subset = None, None
    others = range(1, s)
    for size in range(1, s):
        for side in combinations(others, size):
            rest = tuple(b for b in range(s) if b not in side)
            small = side if len(side) <= len(rest) else rest
            large = rest if small is side else side
            # bit b sits on axis s-1-b
            matrix = psi.transpose([s - 1 - b for b in small] +
                                   [s - 1 - b for b in large])
            matrix = matrix.reshape(1 << len(small), -1)
            values = eigvalsh(matrix.dot(matrix.T))
            labels = tuple(sorted(state.sites[b] for b in small))
            spectra[labels] = values
            top = values[-1]
            if (best is None or top > best + tolerance or
                    (abs(top - best) <= tolerance and labels < best_subset)):
                best, best_subset = top, labels
    logger.debug('Exact GGM over {0} cuts: lambda^2 {1!r}'.format(
        len(spectra), best
    ))
    return GGMResult(ggm=1 - best, lambda_sq_max=best,
                     argmax_subset=best_subset, subset_spectra=spectra)


def _two_site(rho):
    entries = _float_entries(rho)
    if entries.shape != (4, 4):
        raise DimensionError(
            'expected a two-site matrix, got shape {0!r}'.format(
                entries.shape
            )
        )
    return entries


def singlet_weight(rho):
    """<s|rho|s> for s = (|01> - |10>)/sqrt(2)."""
    r = _two_site(rho)
    return (r[1, 1] + r[2, 2] - r[1, 2] - r[2, 1]) / 2


def werner_matrix(p):
    singlet = numpy.array([0, -1, 1, 0]) / numpy.sqrt(2)
    return (p * numpy.outer(singlet, singlet) +
            (1 - p) * numpy.identity(4) / 4)


def werner_fit(rho):
    """Fits p * |s><s| + (1 - p) * I/4 to a two-site matrix."""
    r = _two_site(rho)
    p = (4 * singlet_weight(r) - 1) / 3
    model = werner_matrix(p)
    residual = numexpr.evaluate('max(abs(r - model))',
                                local_dict={'r': r.ravel(),
                                            'model': model.ravel()},
                                global_dict={})
    return WernerFit(p=float(p), residual=float(residual))


def partial_transpose(rho):
    """Transposes the second site of a two-site matrix."""
    r = _two_site(rho)
    # axes: second site, first site (row), then the same for columns
    return r.reshape(2, 2, 2, 2).transpose(2, 1, 0, 3).reshape(4, 4)


def negativity(rho):
    """Sum of the magnitudes of the negative eigenvalues of the partial
    transpose."""
    values = eigvalsh(partial_transpose(rho))
    return float(numexpr.evaluate('sum(where(values < 0, -values, 0.0))',
                                  local_dict={'values': values},
                                  global_dict={}))


def pair_marginal(rho2, legs, kind='chain'):
    """Two-site marginal of a window for a nearest-neighbour pair.

    'chain' is leg 1 on both rungs of the window; 'rung' is legs 1 and 2
    of its first rung.
    """
    density = getattr(rho2, 'rho', rho2)
    sites = density.kept_sites
    if kind == 'chain':
        pair = (sites[0], sites[legs])
    elif kind == 'rung':
        if legs < 2:
            raise ValidationError('a single-leg rung has no pair')
        pair = (sites[0], sites[1])
    else:
        raise ValidationError(
            "kind must be 'chain' or 'rung': {0!r}".format(kind)
        )
    return reduce_density(density, pair)

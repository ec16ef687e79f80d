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

import numpy

from .exceptions import OddPeriodicError, ValidationError


def enum(**enums):
    E = namedtuple(typename='enum',
                   field_names=list(enums.keys()))
    return E(**enums)


OUTPUT_FORMATS = enum(CSV='csv', JSON='json')

BOUNDARIES = enum(OPEN='open', PERIODIC='periodic')


_LadderSpec = namedtuple('LadderSpec', ['legs', 'rungs', 'periodic'])


class LadderSpec(_LadderSpec):
    """Geometry of an M-leg ladder with N rungs.

    Periodicity only ever closes the chain direction (rung N to rung 1).
    """
    def __new__(cls, legs, rungs, periodic=False):
        legs = int(legs)
        rungs = int(rungs)
        if legs < 1:
            raise ValidationError('legs must be 1 or greater: {0!r}'.format(legs))
        if rungs < 1:
            raise ValidationError(
                'rungs must be 1 or greater: {0!r}'.format(rungs)
            )
        if periodic and rungs % 2:
            raise OddPeriodicError(
                'periodic ladder needs an even number of rungs: {0!r}'.format(
                    rungs
                )
            )
        return super(LadderSpec, cls).__new__(cls, legs, rungs, bool(periodic))

    @property
    def sites(self):
        return self.legs * self.rungs

    @property
    def boundary(self):
        if self.periodic:
            return BOUNDARIES.PERIODIC
        return BOUNDARIES.OPEN

    def __str__(self):
        return '{0}x{1} {2}'.format(self.legs, self.rungs, self.boundary)


_SiteIndex = namedtuple('SiteIndex', ['leg', 'rung', 'linear'])


class SiteIndex(_SiteIndex):
    @classmethod
    def at(cls, leg, rung, legs):
        return cls(leg=leg, rung=rung, linear=(rung - 1) * legs + (leg - 1))

    @classmethod
    def from_linear(cls, linear, legs):
        rung, leg = divmod(linear, legs)
        return cls(leg=leg + 1, rung=rung + 1, linear=linear)

    @property
    def color(self):
        """0 for sublattice A, 1 for sublattice B."""
        return (self.leg + self.rung) % 2


Dimer = namedtuple('Dimer', ['a', 'b'])     # linear indices, a on sublattice A


_DensityMatrix = namedtuple('DensityMatrix', ['kept_sites', 'entries'])


class DensityMatrix(_DensityMatrix):
    """Square matrix over the configurations of `kept_sites`.

    Bit j of a row or column index is the spin of ``kept_sites[j]``.
    Entries are exact integers until `normalized` is called.
    """
    def __new__(cls, kept_sites, entries):
        kept_sites = tuple(kept_sites)
        dim = 1 << len(kept_sites)
        if entries.shape != (dim, dim):
            raise ValidationError(
                'matrix shape {0!r} does not match {1} sites'.format(
                    entries.shape, len(kept_sites)
                )
            )
        return super(DensityMatrix, cls).__new__(cls, kept_sites, entries)

    @property
    def dimension(self):
        return self.entries.shape[0]

    @property
    def trace(self):
        if self.entries.dtype.kind == 'f':
            return float(self.entries.trace())
        return sum(int(x) for x in self.entries.diagonal())

    @property
    def is_exact(self):
        return self.entries.dtype.kind in 'iuO'

    def normalized(self):
        if not self.is_exact:
            return self._replace(entries=self.entries / self.trace)
        exact = numpy.array(self.entries, dtype=object) / self.trace
        return self._replace(entries=exact.astype(float))

    def is_symmetric(self):
        return bool((self.entries == self.entries.T).all())


_GGMResult = namedtuple('GGMResult', ['ggm', 'lambda_sq_max',
                                      'argmax_subset', 'subset_spectra'])


class GGMResult(_GGMResult):
    @property
    def subset_label(self):
        return '-'.join(str(i) for i in self.argmax_subset)


WernerFit = namedtuple('WernerFit', ['p', 'residual'])


_SweepRow = namedtuple('SweepRow', ['legs', 'rungs', 'periodic', 'ggm',
                                    'lambda_sq_max', 'argmax_subset',
                                    'werner_p', 'negativity', 'log2_norm'])


class SweepRow(_SweepRow):
    @property
    def key(self):
        return (self.legs, self.rungs, self.periodic)


_AssembledRho = namedtuple('AssembledRho', ['rho', 'norm_check',
                                            'components', 'signs',
                                            'rung_terms'])


class AssembledRho(_AssembledRho):
    """Two-rung reduced matrix with the addends it was summed from.

    `rho` is in the singlet frame; `components` are sign-free and turn into
    their singlet-frame form through the diagonal `signs`.  `rung_terms`
    holds sign-free intermediate rung objects by name.
    """
    def __new__(cls, rho, norm_check, components, signs, rung_terms=None):
        return super(AssembledRho, cls).__new__(cls, rho, norm_check,
                                                components, signs,
                                                rung_terms or {})

    def component(self, name):
        return self.components[name] * numpy.outer(self.signs, self.signs)

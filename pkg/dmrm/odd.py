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

from collections import namedtuple, OrderedDict
import logging

import numpy

from .blocks import (block_vector, operator_pair, transfer_contract,
                     transfer_ring, window_signs, window_sites)
from .dm_types import AssembledRho, DensityMatrix
from .exceptions import ParityError, ValidationError, VerificationError


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


_OddLadderTable = namedtuple('OddLadderTable', ['legs', 'rungs', 'Z2', 'Z',
                                                'omega'])


class OddLadderTable(_OddLadderTable):
    def z(self, k):
        """Norm of the open k-rung block product, k even."""
        if k % 2:
            raise ParityError('odd ladders need even rungs: {0!r}'.format(k))
        return self.Z2 ** (k // 2)


def run_odd_recursion(library, n):
    """Norms Z_k = Z2**(k/2) and the ring matrix Omega_n.

    Omega_n = V**(n+1) chains the blocks of the open state on rungs
    1 .. n with the shifted blocks on 2 .. n+1 and the wrap block, leaving
    rungs n+2 (rows) and n+1 (columns) open.
    """
    if library.even:
        raise ParityError('odd recursion needs odd legs: M={0}'.format(
            library.legs
        ))
    if n < 0 or n % 2:
        raise ParityError('rungs must be even: {0!r}'.format(n))
    Z2 = library.scalars['Z2']
    Z = dict((k, Z2 ** (k // 2)) for k in range(0, n + 3, 2))
    omega = transfer_contract([library.two_rung] * (n + 1))
    logger.debug('M={0}: Z2={1}, Z_{2}={3}'.format(library.legs, Z2, n,
                                                   Z[n]))
    return OddLadderTable(legs=library.legs, rungs=n, Z2=Z2, Z=Z,
                          omega=omega)


def periodic_odd_norm(library, n):
    """Norm of the periodic (n+2)-rung state: two block tilings plus twice
    their overlap, the trace of the closed ring of n+2 blocks."""
    Z2 = library.scalars['Z2']
    ring = transfer_ring([library.two_rung] * (n + 2))
    return 2 * Z2 ** ((n + 2) // 2) + 2 * ring


def assemble_rho2_periodic_odd(library, table, n):
    """Two-rung matrix on rungs n+1, n+2 of the periodic (n+2)-rung ladder.

    rho = Z_n |2><2| + Z_{n-2} rhobar (x) rhobar + (|2><Omega_n| + h.c.),
    rhobar being the second rung of |2> with the first traced.
    """
    if table.omega is None:
        raise ValidationError('table carries no ring matrix')
    if table.rungs != n:
        raise ValidationError(
            'ring matrix is for {0} rungs, not {1}'.format(table.rungs, n)
        )
    if n < 2 or n % 2:
        raise ParityError('periodic odd assembly needs even n >= 2: '
                          '{0!r}'.format(n))

    v = block_vector(library.two_rung)
    rho_bar = library.rho_bar
    cross = numpy.outer(v, table.omega.reshape(-1))
    components = OrderedDict([
        ('two_rung', table.z(n) * numpy.outer(v, v)),
        ('rho_bar', table.z(n - 2) * operator_pair(rho_bar, rho_bar)),
        ('omega', cross + cross.T),
    ])
    rho = sum(components.values())
    signs = window_signs(library.legs, n + 1)
    density = DensityMatrix(kept_sites=window_sites(library.legs, n + 1),
                            entries=rho * numpy.outer(signs, signs))
    assembled = AssembledRho(rho=density, norm_check=density.trace,
                             components=components, signs=signs,
                             rung_terms={'omega': table.omega})

    expected = periodic_odd_norm(library, n)
    if assembled.norm_check != expected:
        raise VerificationError(assembled.norm_check - expected, 0,
                                'periodic odd trace')
    logger.debug('Periodic odd M={0} n={1}: trace {2}'.format(
        library.legs, n, assembled.norm_check
    ))
    return assembled


def assemble_rho2_open_odd(library, table, n):
    """Open odd ladder: rungs n+1, n+2 form one whole block, rho = Z_n |2><2|.
    """
    if n % 2:
        raise ParityError('rungs must be even: {0!r}'.format(n))
    v = block_vector(library.two_rung)
    components = OrderedDict([('two_rung', table.z(n) * numpy.outer(v, v))])
    signs = window_signs(library.legs, n + 1)
    density = DensityMatrix(kept_sites=window_sites(library.legs, n + 1),
                            entries=components['two_rung'] *
                            numpy.outer(signs, signs))
    return AssembledRho(rho=density, norm_check=density.trace,
                        components=components, signs=signs)

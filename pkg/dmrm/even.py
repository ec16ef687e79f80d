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
from fractions import Fraction
import logging

import numpy

from .blocks import (block_vector, expand_in_rung_basis, operator_pair,
                     rung_pair, shifted_overlap_h, shifted_overlap_j,
                     transfer_contract, window_signs, window_sites)
from .dm_types import AssembledRho, DensityMatrix
from .exceptions import (BasisIncompleteError, ParityError, ValidationError,
                         VerificationError)


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


_RecursionTable = namedtuple('RecursionTable',
                             ['legs', 'rungs', 'Z', 'Y', 'A1', 'A2',
                              'g', 'h', 'gbar', 'hbar', 'u', 'X'])


class RecursionTable(_RecursionTable):
    """Exact per-rung sequences of the even-ladder recursion.

    Every sequence is indexed by the rung count k = 0 .. rungs.  `Y` holds
    one sequence per rung basis vector (Y[0] is Y1, Y[1] is Y2).  `u[k]` is
    the overlap <k-1|k> left open on rung k, and `X` the rung-basis
    coefficients of the shifted overlap <n-2|n> at k = rungs.
    """

    def z(self, k):
        return self.Z[k] if k >= 0 else 0

    @property
    def Y1(self):
        return self.Y[0]

    @property
    def Y2(self):
        if len(self.Y) > 1:
            return self.Y[1]
        return [0] * (self.rungs + 1)

    def xi(self, library, k):
        """<xi_k| = <k-1| <2bar| |k>, a vector on the rung after k.

        With the two-vector rung basis this is
        (C A1_k + Cbar A2_k) <1| + (D A1_k + Dbar A2_k) <1bar|.
        """
        if len(library.alpha_basis) > 2:
            return library.contract(self.u[k])
        s = library.scalars
        a1, a2 = self.A1[k], self.A2[k]
        return ((s['C'] * a1 + s['Cbar'] * a2) * library.one_rung +
                (s['D'] * a1 + s['Dbar'] * a2) * library.one_rung_bar)


def _as_int(value, what):
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise BasisIncompleteError(value, '{0} is not integer'.format(what))
        return int(value.numerator)
    return int(value)


def _require_even(library):
    if not library.even:
        raise ParityError('even recursion needs even legs: M={0}'.format(
            library.legs
        ))


def _iterate_pair(scalars, g0, h0, n):
    C, D = scalars['C'], scalars['D']
    Cbar, Dbar = scalars['Cbar'], scalars['Dbar']
    g, h = [g0], [h0]
    for _ in range(n):
        g_next = C * g[-1] + Cbar * h[-1]
        h.append(D * g[-1] + Dbar * h[-1])
        g.append(g_next)
    return g, h


def _amplitude_sequences(library, Z, n):
    s = library.scalars
    g, h = _iterate_pair(s, 1, 0, n)
    gbar, hbar = _iterate_pair(s, 0, 1, n)
    A1 = [0] + [sum(Z[k - i] * g[i - 1] for i in range(1, k + 1))
                for k in range(1, n + 1)]
    A2 = [0] + [sum(Z[k - i] * h[i - 1] for i in range(2, k + 1))
                for k in range(1, n + 1)]
    return A1, A2, g, h, gbar, hbar


def _open_overlaps(library, Z, n):
    e = library.one_rung
    u = [e * 0]
    for k in range(1, n + 1):
        u.append(Z[k - 1] * e + library.contract(u[-1]))
    return u


def _finish(library, n, Z, Y):
    Z = [_as_int(z, 'Z') for z in Z]
    Y = tuple([_as_int(y, 'Y') for y in seq] for seq in Y)
    A1, A2, g, h, gbar, hbar = _amplitude_sequences(library, Z, n)
    u = _open_overlaps(library, Z, n)
    X = exact_x_coefficients(library, n) if n >= 2 else None
    table = RecursionTable(legs=library.legs, rungs=n, Z=Z, Y=Y, A1=A1,
                           A2=A2, g=g, h=h, gbar=gbar, hbar=hbar, u=u, X=X)
    logger.debug('M={0}: Z={1}'.format(library.legs, Z))
    return table


def run_even_recursion(library, n):
    """Runs the two-channel recursion for Z, Y1 and Y2 up to `n` rungs.

    Rung bases larger than {|1>, |1bar>} go through
    `run_even_recursion_general`.
    """
    _require_even(library)
    if n < 1:
        raise ValidationError('rungs must be 1 or greater: {0!r}'.format(n))
    if len(library.alpha_basis) > 2:
        logger.debug('M={0}: rung basis of {1} vectors, general '
                     'recursion'.format(library.legs,
                                        len(library.alpha_basis)))
        return run_even_recursion_general(library, n)

    s = library.scalars
    A, B, C, D = s['A'], s['B'], s['C'], s['D']
    Z = [1]
    Y1, Y2 = [0], [0]
    for k in range(1, n + 1):
        z_before = Z[k - 2] if k >= 2 else 0
        Z.append(A * Z[k - 1] + B * z_before +
                 2 * C * Y1[k - 1] + 2 * D * Y2[k - 1])
        Y1.append(A * Z[k - 1] + C * Y1[k - 1] + D * Y2[k - 1])
        Y2.append(s['Abar'] * Z[k - 1] + s['Cbar'] * Y1[k - 1] +
                  s['Dbar'] * Y2[k - 1])
    Y = (Y1, Y2) if library.bar_channel else (Y1,)
    return _finish(library, n, Z, Y)


def run_even_recursion_general(library, n):
    """Recursion over the full rung basis.

    Z_k = A Z_{k-1} + B Z_{k-2} + 2 sum_j a(1, j) Y^j_{k-1} and
    Y^j_k = G(j, 1) Z_{k-1} + sum_m a(j, m) Y^m_{k-1}, with a the
    contraction table of the basis and G its Gram matrix.
    """
    _require_even(library)
    if n < 1:
        raise ValidationError('rungs must be 1 or greater: {0!r}'.format(n))
    basis = library.alpha_basis
    table = library.expansion
    if len(table) != len(basis):
        raise BasisIncompleteError(0, 'rung basis is not closed')

    s = library.scalars
    gram = library.gram
    size = len(basis)
    Z = [Fraction(1)]
    Y = [[Fraction(0)] for _ in range(size)]
    for k in range(1, n + 1):
        z_before = Z[k - 2] if k >= 2 else 0
        Z.append(s['A'] * Z[k - 1] + s['B'] * z_before +
                 2 * sum(table[0][j] * Y[j][k - 1] for j in range(size)))
        previous = [Y[m][k - 1] for m in range(size)]
        for j in range(size):
            Y[j].append(gram[j][0] * Z[k - 1] +
                        sum(table[j][m] * previous[m] for m in range(size)))
    return _finish(library, n, Z, Y)


def printed_z_sequence(library, n):
    """Z with the cross term 2 C Y1_{k-2} + 2 D Y2_{k-1}.

    This index choice does not reproduce the norm of the state (Z_2 = 8
    instead of 12 for two legs); kept for comparison only.
    """
    _require_even(library)
    s = library.scalars
    Z = [1]
    Y1, Y2 = [0], [0]
    for k in range(1, n + 1):
        z_before = Z[k - 2] if k >= 2 else 0
        y1_before = Y1[k - 2] if k >= 2 else 0
        Z.append(s['A'] * Z[k - 1] + s['B'] * z_before +
                 2 * s['C'] * y1_before + 2 * s['D'] * Y2[k - 1])
        Y1.append(s['A'] * Z[k - 1] + s['C'] * Y1[k - 1] +
                  s['D'] * Y2[k - 1])
        Y2.append(s['Abar'] * Z[k - 1] + s['Cbar'] * Y1[k - 1] +
                  s['Dbar'] * Y2[k - 1])
        if not library.bar_channel:
            Y2[-1] = 0
    return Z


def chain_term(library, n):
    """Fully interlocked <2bar|...|2bar> chain of the shifted overlap."""
    W = library.two_rung_bar
    if n % 2:
        return W * 0
    return transfer_contract([W] * (n - 1))


def exact_x_coefficients(library, n):
    """Rung-basis coefficients of <n-2|_{2..n-1} |n>_{1..n}.

    Returns a square list C with the overlap equal to
    ``sum C[i][j] |a_i>_1 |a_j>_n`` plus `chain_term`.
    """
    if n < 2:
        raise ValidationError('need at least 2 rungs: {0!r}'.format(n))
    H = shifted_overlap_h(library, n) - chain_term(library, n)
    basis = library.alpha_basis
    pairs = [numpy.outer(a, b).reshape(-1) for a in basis for b in basis]
    flat = expand_in_rung_basis(H.reshape(-1), pairs)
    size = len(basis)
    return [[_as_int(flat[i * size + j], 'X') for j in range(size)]
            for i in range(size)]


def printed_x_coefficients(library, table, n):
    """(X1, X2, X3, X4) from the closed-form sums over A, g, h, gbar, hbar.

    Only the two-channel ladders carry this form; negative indices and
    index 0 of A contribute nothing.
    """
    s = library.scalars
    C, D = s['C'], s['D']

    def a(seq, k):
        return seq[k] if 0 <= k < len(seq) else 0

    def x(left, right, A):
        total = 0
        for i in range(0, n + 1):
            if 2 * i >= len(left):
                break
            total += (left[2 * i] * (a(A, n - 1 - 2 * i) +
                                     C * a(A, n - 2 - 2 * i)) +
                      right[2 * i] * D * a(A, n - 2 - 2 * i))
        return total

    return (x(table.g, table.gbar, table.A1),
            x(table.g, table.gbar, table.A2),
            x(table.h, table.hbar, table.A1),
            x(table.h, table.hbar, table.A2))


def _check_table(table, n, periodic=False):
    if table.rungs < n:
        raise ValidationError(
            'recursion table has {0} rungs, need {1}'.format(table.rungs, n)
        )
    if n < (2 if periodic else 1):
        raise ValidationError('too few rungs for assembly: {0!r}'.format(n))


def _signed(library, n, components):
    rho = sum(components.values())
    signs = window_signs(library.legs, n + 1)
    entries = rho * numpy.outer(signs, signs)
    density = DensityMatrix(kept_sites=window_sites(library.legs, n + 1),
                            entries=entries)
    return AssembledRho(rho=density, norm_check=density.trace,
                        components=components, signs=signs)


def _open_components(library, table, n):
    e = library.one_rung
    v = block_vector(library.two_rung)
    cross = numpy.outer(v, rung_pair(table.xi(library, n), e))
    return OrderedDict([
        ('two_rung', table.z(n) * numpy.outer(v, v)),
        ('rho_bar', table.z(n - 1) * operator_pair(library.rho_bar,
                                                   numpy.outer(e, e))),
        ('xi', cross + cross.T),
    ])


def assemble_rho2_open(library, table, n):
    """Two-rung matrix on rungs n+1, n+2 of the open (n+2)-rung ladder.

    rho = Z_n |2><2| + Z_{n-1} rhobar (x) |1><1| + (|2> <xi_n|<1| + h.c.)
    """
    _require_even(library)
    _check_table(table, n)
    assembled = _signed(library, n, _open_components(library, table, n))
    if table.rungs >= n + 2 and assembled.norm_check != table.Z[n + 2]:
        raise VerificationError(assembled.norm_check - table.Z[n + 2], 0,
                                'open trace')
    logger.debug('Open M={0} n={1}: trace {2}'.format(
        library.legs, n, assembled.norm_check
    ))
    return assembled


def assemble_rho2_periodic(library, table, n):
    """Two-rung matrix on rungs n+1, n+2 of the periodic (n+2)-rung ladder.

    Adds to the open matrix the wrap term |n>_{2..n+1}|2bar>_{n+2,1}:
    its own trace, beta1, and the cross term beta2 with its transpose.
    """
    _require_even(library)
    if n % 2:
        raise ParityError('periodic recursion needs even n: {0!r}'.format(n))
    _check_table(table, n, periodic=True)

    e = library.one_rung
    W = library.two_rung_bar
    rho_bar = library.rho_bar
    d = library.dimension
    v = block_vector(library.two_rung)
    xi_n = table.xi(library, n)
    xi_before = table.xi(library, n - 1)

    components = _open_components(library, table, n)

    last_rung = (table.z(n - 1) * numpy.outer(e, e) +
                 table.z(n - 2) * rho_bar +
                 numpy.outer(e, xi_before) + numpy.outer(xi_before, e))
    components['beta1'] = operator_pair(last_rung, rho_bar)

    H = shifted_overlap_h(library, n)
    phi = W.dot(H).dot(W)
    J = shifted_overlap_j(library, n - 1)
    kappa = W.dot(J.T).dot(W)
    eta = W.dot(J.dot(e))

    wrap = (e[:, None, None, None] * kappa[None, :, :, None] *
            e[None, None, None, :]).reshape(d * d, d * d)
    beta2 = (numpy.outer(v, rung_pair(e, xi_n)) +
             numpy.outer(v, phi.reshape(-1)) +
             operator_pair(rho_bar, numpy.outer(e, xi_before)) +
             wrap)
    components['beta2'] = beta2 + beta2.T

    assembled = _signed(library, n, components)._replace(
        rung_terms={'phi': phi, 'eta': eta, 'kappa': kappa}
    )
    logger.debug('Periodic M={0} n={1}: trace {2}'.format(
        library.legs, n, assembled.norm_check
    ))
    return assembled

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

"""Rung and two-rung block states of an M-leg ladder.

Blocks live in the sign-free frame: every amplitude is multiplied by
(-1)**(number of up spins on sublattice A).  There, rung states are
non-negative integer vectors over the 2**M configurations of one rung and
a two-rung block is a symmetric 2**M x 2**M matrix indexed by
(first rung, second rung).  Block states do not depend on where they sit
along the ladder in this frame.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from fractions import Fraction
from functools import reduce
import logging
import math

import numpy

from .constants import LEGS_CAP
from .dm_types import LadderSpec
from .exceptions import (BasisIncompleteError, DimensionError, ParityError,
                         ResourceCapError, ValidationError)
from .lattice import block_coverings, build_lattice, oriented, rung_sites
from .oracle import covering_state, superpose, to_marshall
from .utils import popcount


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


def exact_vector(values):
    return numpy.array([int(v) for v in values], dtype=object)


def exact_zeros(shape):
    result = numpy.empty(shape, dtype=object)
    result.fill(0)
    return result


def _dense(state, bits):
    result = exact_zeros(1 << bits)
    for config, amplitude in state.amplitudes.items():
        result[config] = amplitude
    return result


def rung_dimers(legs, shift=0):
    """Dimers pairing legs (1+shift, 2+shift), (3+shift, 4+shift), ...

    Legs wrap around, so ``shift=1`` on an even rung gives (2,3) ... (M,1).
    """
    sites = rung_sites(1, legs)
    return tuple(oriented(sites[(i + shift) % legs],
                          sites[(i + 1 + shift) % legs], legs)
                 for i in range(0, legs - 1, 2))


def rung_state(dimers, legs):
    """Sign-free vector of a product of singlets on rung 1."""
    state = covering_state(dimers, rung_sites(1, legs))
    return _dense(to_marshall(state, legs), legs)


def two_rung_block(legs):
    """Sign-free matrix V of the sum of all coverings of an M x 2 block."""
    lattice = build_lattice(LadderSpec(legs, 2))
    support = rung_sites(1, legs) + rung_sites(2, legs)
    state = to_marshall(superpose(block_coverings(lattice, (1, 2)), support),
                        legs)
    d = 1 << legs
    # vec index = first + d * second
    return _dense(state, 2 * legs).reshape(d, d).T.copy()


def gram_matrix(basis):
    return [[int(numpy.dot(u, v)) for v in basis] for u in basis]


def _solve(matrix, rhs):
    """Gauss-Jordan elimination over the rationals."""
    n = len(rhs)
    rows = [[Fraction(x) for x in row] + [Fraction(b)]
            for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise BasisIncompleteError(0, 'singular Gram matrix')
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


def expand_in_rung_basis(vector, basis):
    """Coefficients c with ``vector == sum(c[i] * basis[i])``, exactly.

    Raises `BasisIncompleteError` if `vector` is not in the span.
    """
    if not basis:
        raise BasisIncompleteError(int(numpy.dot(vector, vector)),
                                   'empty basis')
    for b in basis:
        if len(b) != len(vector):
            raise DimensionError(
                'vector of length {0} against basis of length {1}'.format(
                    len(vector), len(b)
                )
            )
    coefficients = _solve(gram_matrix(basis),
                          [int(numpy.dot(b, vector)) for b in basis])
    residual = [Fraction(int(x)) for x in vector]
    for c, b in zip(coefficients, basis):
        if c:
            residual = [r - c * int(x) for r, x in zip(residual, b)]
    norm = sum(r * r for r in residual)
    if norm:
        raise BasisIncompleteError(norm)
    return coefficients


def _reduced(vector):
    """Integer vector divided by the gcd of its entries."""
    g = reduce(math.gcd, (abs(int(x)) for x in vector), 0)
    if g > 1:
        return exact_vector(int(x) // g for x in vector)
    return vector


def close_alpha_basis(legs, two_rung_bar, seeds):
    """Grows `seeds` until contraction with the |2bar> block is closed.

    Returns ``(basis, expansion)`` where ``expansion[k][j]`` is the
    coefficient of ``basis[j]`` in the contraction of ``basis[k]`` with
    |2bar>.
    """
    limit = 1 << legs
    basis = []
    for v in seeds:
        try:
            expand_in_rung_basis(v, basis)
        except BasisIncompleteError:
            basis.append(v)

    k = 0
    while k < len(basis):
        image = two_rung_bar.dot(basis[k])
        try:
            expand_in_rung_basis(image, basis)
        except BasisIncompleteError:
            basis.append(_reduced(image))
            logger.debug('M={0}: rung basis grew to {1}'.format(legs,
                                                               len(basis)))
            assert len(basis) <= limit
        k += 1

    expansion = [expand_in_rung_basis(two_rung_bar.dot(b), basis)
                 for b in basis]
    logger.debug('M={0}: rung basis closed at {1} vectors'.format(legs,
                                                                  len(basis)))
    return basis, expansion


def transfer_contract(blocks):
    """Contracts a chain of two-rung blocks sharing rungs.

    Each block is a matrix over (left rung, right rung); the result keeps
    the first block's left rung and the last block's right rung open.
    """
    if not blocks:
        raise ValidationError('nothing to contract')
    for left, right in zip(blocks, blocks[1:]):
        if left.shape[1] != right.shape[0]:
            raise DimensionError(
                'cannot chain {0!r} with {1!r}'.format(left.shape,
                                                       right.shape)
            )
    return reduce(numpy.dot, blocks)


def transfer_ring(blocks):
    """Trace of the closed chain of `blocks`."""
    product = transfer_contract(blocks)
    if product.shape[0] != product.shape[1]:
        raise DimensionError('ring does not close: {0!r}'.format(
            product.shape
        ))
    return sum(product.diagonal())


class BlockLibrary(object):
    """Block states and overlap scalars of an M-leg ladder.

    param: legs: number of legs M.
    param: two_rung: matrix V of the two-rung block |2>.
    param: one_rung: vector of |1>, dimers (1,2), (3,4), ... (even M only).
    param: one_rung_bar: vector of |1bar>, dimers (2,3), ..., (M,1).
    param: alpha_basis: closed rung basis, starting with |1> and |1bar>.
    param: expansion: contraction table of `alpha_basis` with |2bar>.
    """

    def __init__(self, legs, two_rung, one_rung=None, one_rung_bar=None,
                 alpha_basis=None, expansion=None):
        self.legs = legs
        self.dimension = 1 << legs
        self.two_rung = two_rung
        self._one_rung = one_rung
        self._one_rung_bar = one_rung_bar
        self.alpha_basis = alpha_basis or []
        self.expansion = expansion or []
        self._scalars = None
        self._two_rung_bar = None
        if one_rung is not None:
            self._two_rung_bar = two_rung - numpy.outer(one_rung, one_rung)

    def __repr__(self):
        return '<BlockLibrary: M={0}>'.format(self.legs)

    @property
    def even(self):
        return self.legs % 2 == 0

    def _require_even(self, what):
        if not self.even:
            raise ParityError(
                '{0} has no analogue for odd legs: M={1}'.format(what,
                                                                 self.legs)
            )

    @property
    def one_rung(self):
        self._require_even('|1>')
        return self._one_rung

    @property
    def one_rung_bar(self):
        self._require_even('|1bar>')
        return self._one_rung_bar

    @property
    def two_rung_bar(self):
        """|2bar> = |2> - |1>|1>."""
        self._require_even('|2bar>')
        return self._two_rung_bar

    @property
    def rho_bar(self):
        """Second rung of |2bar> (or of |2> for odd M), first rung traced."""
        block = self.two_rung_bar if self.even else self.two_rung
        return block.T.dot(block)

    @property
    def gram(self):
        return gram_matrix(self.alpha_basis)

    @property
    def bar_channel(self):
        """Whether |1bar> is independent of |1> (false for M = 2)."""
        return len(self.alpha_basis) > 1

    def contract(self, vector):
        """<v|_n |2bar>_{n,n+1}, a vector on rung n+1."""
        return self.two_rung_bar.dot(vector)

    def _coefficient(self, k, j):
        if k < len(self.expansion) and j < len(self.expansion[k]):
            return self.expansion[k][j]
        return Fraction(0)

    @property
    def scalars(self):
        """Exact overlap scalars; odd ladders only carry Z2."""
        if self._scalars is None:
            self._scalars = self._compute_scalars()
        return self._scalars

    def _compute_scalars(self):
        result = {'Z2': int((self.two_rung * self.two_rung).sum())}
        if not self.even:
            return result
        e, ebar = self._one_rung, self._one_rung_bar
        W = self.two_rung_bar
        result.update(
            A=int(e.dot(e)),
            Abar=int(e.dot(ebar)),
            B=int((W * W).sum()),
            C=_integer(self._coefficient(0, 0)),
            D=_integer(self._coefficient(0, 1)),
            Cbar=_integer(self._coefficient(1, 0)),
            Dbar=_integer(self._coefficient(1, 1)),
        )
        return result


def _integer(value):
    if value.denominator != 1:
        logger.warning('Non-integer coefficient {0} rounded'.format(value))
    return int(round(value))


def build_blocks(legs, legs_cap=LEGS_CAP):
    """Builds the `BlockLibrary` of an M-leg ladder."""
    if legs < 1:
        raise ValidationError('legs must be 1 or greater: {0!r}'.format(legs))
    if legs > legs_cap:
        raise ResourceCapError('legs', legs, legs_cap)

    V = two_rung_block(legs)
    if legs % 2:
        logger.debug('M={0}: odd ladder, Z2={1}'.format(
            legs, int((V * V).sum())
        ))
        return BlockLibrary(legs=legs, two_rung=V)

    e = rung_state(rung_dimers(legs), legs)
    ebar = rung_state(rung_dimers(legs, shift=1), legs)
    W = V - numpy.outer(e, e)
    basis, expansion = close_alpha_basis(legs, W, [e, ebar])
    library = BlockLibrary(legs=legs, two_rung=V, one_rung=e,
                           one_rung_bar=ebar, alpha_basis=basis,
                           expansion=expansion)
    logger.debug('M={0}: {1}'.format(legs, library.scalars))
    return library


def strip_contract(library, steps, closing):
    """Overlap of a literal ket with a literal bra shifted by one rung.

    The ket starts at rung 1, whose configuration stays open as the row
    index.  Rungs 2 .. `steps` are contracted, then one more rung closes
    the strip: ``closing='ket'`` ends the ket on it while the bra stopped
    at `steps`; ``closing='bra'`` ends the bra on it while the ket stopped
    at `steps`.  The column index is that last rung's open configuration.
    """
    if closing not in ('ket', 'bra'):
        raise ValidationError('closing must be ket or bra: {0!r}'.format(
            closing
        ))
    e = library.one_rung
    W = library.two_rung_bar
    A = library.scalars['A']
    B = library.scalars['B']
    We = W.dot(e)

    # E00: both closed; E10: ket domino open; E01: bra domino open
    d = library.dimension
    both = e
    both_before = exact_zeros(d)
    ket_open = W
    bra_open = exact_zeros((d, d))
    for _ in range(2, steps + 1):
        crossing = numpy.outer(both, We)
        both, both_before, ket_open, bra_open = (
            A * both + ket_open.dot(e) + bra_open.dot(e) + B * both_before,
            both,
            crossing + bra_open.dot(W),
            crossing + ket_open.dot(W),
        )
    if closing == 'ket':
        return numpy.outer(both, e) + ket_open
    return numpy.outer(both, e) + bra_open


def shifted_overlap_h(library, n):
    """<n-2|_{2..n-1} |n>_{1..n} with rungs 1 and n open."""
    if n < 2:
        raise ValidationError('need at least 2 rungs: {0!r}'.format(n))
    return strip_contract(library, n - 1, 'ket')


def shifted_overlap_j(library, n):
    """<n|_{2..n+1} |n>_{1..n} with rungs 1 and n+1 open."""
    if n < 1:
        raise ValidationError('need at least 1 rung: {0!r}'.format(n))
    return strip_contract(library, n, 'bra')


def rung_pair(first, second):
    """|first>_{n+1} |second>_{n+2} as a vector over the two-rung window."""
    return numpy.multiply.outer(second, first).reshape(-1)


def operator_pair(first, second):
    """Operator `first` on rung n+1 times `second` on rung n+2."""
    d = first.shape[0]
    return (second[:, None, :, None] *
            first[None, :, None, :]).reshape(d * d, d * d)


def block_vector(block):
    """Two-rung block matrix laid out as a window vector."""
    return block.T.reshape(-1)


def rung_signs(legs, rung):
    """(-1)**(up spins on sublattice A) for each configuration of `rung`."""
    mask = 0
    for leg in range(1, legs + 1):
        if (leg + rung) % 2 == 0:
            mask |= 1 << (leg - 1)
    return numpy.array([-1 if popcount(c & mask) % 2 else 1
                        for c in range(1 << legs)], dtype=object)


def window_signs(legs, first_rung):
    """Frame signs of the window made of `first_rung` and the next rung."""
    return rung_pair(rung_signs(legs, first_rung),
                     rung_signs(legs, first_rung + 1))


def window_sites(legs, first_rung):
    return rung_sites(first_rung, legs) + rung_sites(first_rung + 1, legs)

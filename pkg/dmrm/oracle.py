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

from collections import defaultdict
import io
from itertools import chain
import logging

import numpy

from .constants import DEFAULT_SITE_CAP
from .dm_types import DensityMatrix, LadderSpec
from .exceptions import (DimensionError, ParityError, ResourceCapError,
                         SupportMismatchError, UnmatchedSiteError,
                         ValidationError)
from .lattice import (block_coverings, build_lattice, color,
                      enumerate_coverings, oriented, rung_sites)
from .utils import gather_bits, popcount


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


class StateVector(object):
    """Sparse integer-amplitude state over an ordered support of sites.

    Bit b of a configuration is the spin of ``sites[b]`` (1 is up).
    Zero amplitudes are never stored.
    """

    def __init__(self, sites, amplitudes):
        self.sites = tuple(sites)
        self.amplitudes = dict((c, a) for c, a in amplitudes.items() if a)

    @classmethod
    def vacuum(cls):
        """The empty-support state of norm 1."""
        return cls(sites=(), amplitudes={0: 1})

    def __repr__(self):
        return '<StateVector: {0} sites, {1} terms>'.format(len(self.sites),
                                                            len(self))

    def __len__(self):
        return len(self.amplitudes)

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        if set(self.sites) != set(other.sites):
            return False
        return self.amplitudes == other.permuted(self.sites).amplitudes

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __add__(self, other):
        other = other.permuted(self.sites)
        amplitudes = defaultdict(int, self.amplitudes)
        for config, amplitude in other.amplitudes.items():
            amplitudes[config] += amplitude
        return StateVector(sites=self.sites, amplitudes=amplitudes)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, factor):
        return StateVector(sites=self.sites,
                           amplitudes=dict((c, a * factor)
                                           for c, a in self.amplitudes.items()))

    @property
    def norm_sq(self):
        return sum(a * a for a in self.amplitudes.values())

    def permuted(self, sites):
        """Same state with its bits laid out in the order of `sites`."""
        sites = tuple(sites)
        if sites == self.sites:
            return self
        if sorted(sites) != sorted(self.sites):
            raise SupportMismatchError(
                'supports differ: {0!r} and {1!r}'.format(self.sites, sites)
            )
        position = dict((s, i) for i, s in enumerate(self.sites))
        order = [position[s] for s in sites]
        return StateVector(
            sites=sites,
            amplitudes=dict((gather_bits(c, order), a)
                            for c, a in self.amplitudes.items())
        )

    def dense(self):
        """Float amplitude vector of length 2**len(sites)."""
        result = numpy.zeros(1 << len(self.sites))
        for config, amplitude in self.amplitudes.items():
            result[config] = amplitude
        return result


def covering_state(covering, support):
    """Product of singlets |0>_a|1>_b - |1>_a|0>_b over the dimers (a, b)."""
    support = tuple(support)
    position = dict((s, i) for i, s in enumerate(support))
    seen = set()
    amplitudes = {0: 1}
    for a, b in covering:
        for site in (a, b):
            if site not in position:
                raise UnmatchedSiteError(
                    'site {0!r} is not in the support'.format(site)
                )
            if site in seen:
                raise UnmatchedSiteError(
                    'site {0!r} is covered twice'.format(site)
                )
            seen.add(site)
        up_a, up_b = 1 << position[a], 1 << position[b]
        expanded = {}
        for config, amplitude in amplitudes.items():
            expanded[config | up_b] = amplitude
            expanded[config | up_a] = -amplitude
        amplitudes = expanded
    missing = set(support) - seen
    if missing:
        raise UnmatchedSiteError(
            'sites not covered: {0!r}'.format(sorted(missing))
        )
    return StateVector(sites=support, amplitudes=amplitudes)


def superpose(coverings, support):
    """Unit-weight sum of the covering states of `coverings`."""
    amplitudes = defaultdict(int)
    for covering in coverings:
        for config, amplitude in covering_state(covering,
                                                support).amplitudes.items():
            amplitudes[config] += amplitude
    return StateVector(sites=support, amplitudes=amplitudes)


def inner(u, v):
    """Exact bilinear overlap of two states on the same set of sites."""
    if set(u.sites) != set(v.sites):
        raise SupportMismatchError(
            'supports differ: {0!r} and {1!r}'.format(u.sites, v.sites)
        )
    v = v.permuted(u.sites)
    if len(v) < len(u):
        u, v = v, u
    other = v.amplitudes
    return sum(a * other.get(c, 0) for c, a in u.amplitudes.items())


def tensor(u, v):
    """Product state on the support of `u` followed by that of `v`."""
    overlap = set(u.sites) & set(v.sites)
    if overlap:
        raise SupportMismatchError(
            'supports overlap on {0!r}'.format(sorted(overlap))
        )
    shift = len(u.sites)
    amplitudes = {}
    for cv, av in v.amplitudes.items():
        high = cv << shift
        for cu, au in u.amplitudes.items():
            amplitudes[high | cu] = au * av
    return StateVector(sites=u.sites + v.sites, amplitudes=amplitudes)


def marshall_signs(sites, legs):
    """Returns the bit mask of the sublattice-A sites among `sites`."""
    mask = 0
    for i, s in enumerate(sites):
        if color(s, legs) == 0:
            mask |= 1 << i
    return mask


def to_marshall(state, legs):
    """Multiplies each amplitude by (-1)**(up spins on sublattice A).

    The result of a covering superposition has non-negative amplitudes.
    """
    mask = marshall_signs(state.sites, legs)
    return StateVector(
        sites=state.sites,
        amplitudes=dict((c, -a if popcount(c & mask) % 2 else a)
                        for c, a in state.amplitudes.items())
    )


def _check_cap(spec, cap):
    if spec.sites > cap:
        raise ResourceCapError('sites', spec.sites, cap)


def _spec(spec):
    if isinstance(spec, LadderSpec):
        return spec
    return LadderSpec(*spec)


def rvb_full(spec, cap=DEFAULT_SITE_CAP):
    """Equal superposition of every dimer covering of the ladder."""
    spec = _spec(spec)
    _check_cap(spec, cap)
    coverings = enumerate_coverings(spec, cap=cap)
    state = superpose(coverings, range(spec.sites))
    logger.debug('Full RVB {0}: {1} coverings, norm^2 {2}'.format(
        spec, len(coverings), state.norm_sq
    ))
    return state


class _Blocks(object):
    """Signed block states of one ladder at their actual positions."""

    def __init__(self, lattice):
        self.lattice = lattice
        self.legs = lattice.spec.legs

    def sites(self, rungs):
        return tuple(chain.from_iterable(rung_sites(r, self.legs)
                                         for r in rungs))

    def rung_dimers(self, rung):
        """Dimers (1,2), (3,4), ... of `rung`."""
        s = rung_sites(rung, self.legs)
        return tuple(oriented(s[i], s[i + 1], self.legs)
                     for i in range(0, self.legs - 1, 2))

    def one(self, rung):
        return covering_state(self.rung_dimers(rung), rung_sites(rung,
                                                                 self.legs))

    def two_coverings(self, first, second):
        return block_coverings(self.lattice, (first, second))

    def two(self, first, second):
        return superpose(self.two_coverings(first, second),
                         self.sites((first, second)))

    def two_bar_coverings(self, first, second):
        product = tuple(sorted(self.rung_dimers(first) +
                               self.rung_dimers(second)))
        return [c for c in self.two_coverings(first, second) if c != product]

    def two_bar(self, first, second):
        return superpose(self.two_bar_coverings(first, second),
                         self.sites((first, second)))


def _literal_open_even(blocks, first, count):
    """States |k> on rungs first .. first+k-1 for k = 0 .. count."""
    states = [StateVector.vacuum(), blocks.one(first)]
    for k in range(2, count + 1):
        last = first + k - 1
        state = (tensor(states[k - 1], blocks.one(last)) +
                 tensor(states[k - 2], blocks.two_bar(last - 1, last)))
        states.append(state)
    return states[:count + 1]


def _validate_literal(spec, cap, odd_legs):
    spec = _spec(spec)
    if bool(spec.legs % 2) != odd_legs:
        raise ParityError(
            'legs must be {0}: {1!r}'.format('odd' if odd_legs else 'even',
                                             spec.legs)
        )
    _check_cap(spec, cap)
    return spec


def rvb_literal_even(spec, cap=DEFAULT_SITE_CAP):
    """State generated by the even-ladder recursion, expanded in full.

    Open: |n+2> = |n+1>|1> + |n>|2bar>.  Periodic: the open state plus
    |n> on rungs 2 .. n+1 times |2bar> on the wrap rungs (n+2, 1).
    """
    spec = _validate_literal(spec, cap, odd_legs=False)
    L = spec.rungs
    if spec.periodic and L < 4:
        raise ValidationError(
            'periodic recursion needs at least 4 rungs: {0!r}'.format(L)
        )
    blocks = _Blocks(build_lattice(spec))
    support = tuple(range(spec.sites))
    state = _literal_open_even(blocks, 1, L)[L]
    if spec.periodic:
        inner_state = _literal_open_even(blocks, 2, L - 2)[L - 2]
        state = state + tensor(inner_state, blocks.two_bar(L, 1))
    state = state.permuted(support)
    logger.debug('Literal even state {0}: {1} terms, norm^2 {2}'.format(
        spec, len(state), state.norm_sq
    ))
    return state


def _odd_chain(blocks, first, count):
    state = StateVector.vacuum()
    for r in range(first, first + count, 2):
        state = tensor(state, blocks.two(r, r + 1))
    return state


def rvb_literal_odd(spec, cap=DEFAULT_SITE_CAP):
    """Product of two-rung blocks |2>_{1,2}|2>_{3,4}...; periodic adds the
    same product shifted by one rung and closed through the wrap block."""
    spec = _validate_literal(spec, cap, odd_legs=True)
    L = spec.rungs
    if L % 2:
        raise ParityError('rungs must be even: {0!r}'.format(L))
    blocks = _Blocks(build_lattice(spec))
    support = tuple(range(spec.sites))
    state = _odd_chain(blocks, 1, L)
    if spec.periodic:
        if L < 4:
            raise ValidationError(
                'periodic recursion needs at least 4 rungs: {0!r}'.format(L)
            )
        state = state + tensor(_odd_chain(blocks, 2, L - 2),
                               blocks.two(L, 1))
    state = state.permuted(support)
    logger.debug('Literal odd state {0}: {1} terms, norm^2 {2}'.format(
        spec, len(state), state.norm_sq
    ))
    return state


def rvb_literal(spec, cap=DEFAULT_SITE_CAP):
    spec = _spec(spec)
    if spec.legs % 2:
        return rvb_literal_odd(spec, cap=cap)
    return rvb_literal_even(spec, cap=cap)


def literal_coverings(spec):
    """Coverings generated by the literal recursion, with multiplicity."""
    spec = _spec(spec)
    blocks = _Blocks(build_lattice(spec))
    L = spec.rungs

    def merge(*parts):
        return tuple(sorted(chain.from_iterable(parts)))

    if spec.legs % 2:
        def chain_of(first, count):
            terms = [()]
            for r in range(first, first + count, 2):
                terms = [merge(t, c) for t in terms
                         for c in blocks.two_coverings(r, r + 1)]
            return terms

        result = chain_of(1, L)
        if spec.periodic:
            result += [merge(t, c) for t in chain_of(2, L - 2)
                       for c in blocks.two_coverings(L, 1)]
        return sorted(result)

    def open_of(first, count):
        terms = [[()], [blocks.rung_dimers(first)]]
        for k in range(2, count + 1):
            last = first + k - 1
            terms.append(
                [merge(t, blocks.rung_dimers(last)) for t in terms[k - 1]] +
                [merge(t, c) for t in terms[k - 2]
                 for c in blocks.two_bar_coverings(last - 1, last)]
            )
        return terms[count]

    result = open_of(1, L)
    if spec.periodic:
        result += [merge(t, c) for t in open_of(2, L - 2)
                   for c in blocks.two_bar_coverings(L, 1)]
    return sorted(result)


def _rows_and_columns(state, keep):
    position = dict((s, i) for i, s in enumerate(state.sites))
    missing = [s for s in keep if s not in position]
    if missing:
        raise ValidationError(
            'sites {0!r} are not in the support'.format(missing)
        )
    keep_pos = [position[s] for s in keep]
    rest_pos = [position[s] for s in state.sites if s not in set(keep)]

    configs = numpy.fromiter(state.amplitudes.keys(), dtype=numpy.int64,
                             count=len(state))
    columns = numpy.zeros(len(configs), dtype=numpy.int64)
    for j, p in enumerate(keep_pos):
        columns |= ((configs >> p) & 1) << j
    rest = numpy.zeros(len(configs), dtype=numpy.int64)
    for j, p in enumerate(rest_pos):
        rest |= ((configs >> p) & 1) << j
    _, rows = numpy.unique(rest, return_inverse=True)
    return rows.reshape(-1), columns


def partial_trace(state, keep):
    """Reduces a state (or a `DensityMatrix`) onto the sites `keep`.

    The result is exact: its entries are integers and its trace is the
    squared norm of `state`.
    """
    if isinstance(state, DensityMatrix):
        return reduce_density(state, keep)
    keep = tuple(keep)
    if not keep or len(set(keep)) != len(keep):
        raise ValidationError('keep must name distinct sites: {0!r}'.format(
            keep
        ))
    if set(keep) >= set(state.sites):
        raise ValidationError('keep must be a proper subset of the support')

    rows, columns = _rows_and_columns(state, keep)
    values = list(state.amplitudes.values())
    if state.norm_sq < 2 ** 62:
        amplitudes = numpy.array(values, dtype=numpy.int64)
    else:
        amplitudes = numpy.array(values, dtype=object)
    psi = numpy.zeros((rows.max() + 1, 1 << len(keep)),
                      dtype=amplitudes.dtype)
    psi[rows, columns] = amplitudes
    rho = psi.T.dot(psi)
    logger.debug('Partial trace onto {0} sites from {1} terms'.format(
        len(keep), len(state)
    ))
    return DensityMatrix(kept_sites=keep, entries=rho)


def reduce_density(density, keep):
    """Traces the sites of `density` that are not in `keep`."""
    keep = tuple(keep)
    sites = density.kept_sites
    if not keep or not set(keep) <= set(sites) or len(set(keep)) != len(keep):
        raise ValidationError(
            'cannot reduce {0!r} onto {1!r}'.format(sites, keep)
        )
    if keep == sites:
        return density
    k = len(sites)
    # axis of bit j in the C-ordered tensor is k-1-j
    axis = dict((s, k - 1 - j) for j, s in enumerate(sites))
    kept_axes = [axis[s] for s in reversed(keep)]
    traced_axes = [axis[s] for s in sites if s not in set(keep)]
    order = kept_axes + traced_axes
    order += [k + a for a in order]
    dk = 1 << len(keep)
    dt = 1 << len(traced_axes)
    tensor_ = density.entries.reshape([2] * (2 * k)).transpose(order)
    tensor_ = tensor_.reshape(dk, dt, dk, dt)
    entries = tensor_.diagonal(axis1=1, axis2=3).sum(axis=-1)
    return DensityMatrix(kept_sites=keep, entries=entries)


def dump_state(state, fileobj):
    """Writes "bitstring amplitude" lines, site sites[0] leftmost."""
    n = len(state.sites)
    fileobj.write('# sites {0}\n'.format(' '.join(str(s)
                                                  for s in state.sites)))
    for config in sorted(state.amplitudes):
        bits = ''.join('1' if (config >> b) & 1 else '0' for b in range(n))
        fileobj.write('{0} {1}\n'.format(bits, state.amplitudes[config]))


def load_state(fileobj):
    sites = None
    amplitudes = {}
    for lineno, line in enumerate(fileobj, start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith('#'):
            fields = line[1:].split()
            if fields and fields[0] == 'sites':
                sites = tuple(int(s) for s in fields[1:])
            continue
        try:
            bits, amplitude = line.split()
            config = sum(1 << b for b, ch in enumerate(bits) if ch == '1')
            amplitudes[config] = int(amplitude)
        except ValueError:
            raise ValidationError(
                'line {0}: expected "bitstring amplitude": {1!r}'.format(
                    lineno, line
                )
            )
        if sites is None:
            sites = tuple(range(len(bits)))
        elif len(bits) != len(sites):
            raise DimensionError(
                'line {0}: {1} bits for {2} sites'.format(lineno, len(bits),
                                                         len(sites))
            )
    if sites is None:
        return StateVector.vacuum()
    return StateVector(sites=sites, amplitudes=amplitudes)


def dumps_state(state):
    out = io.StringIO()
    dump_state(state, out)
    return out.getvalue()

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

from .constants import DEFAULT_SITE_CAP
from .dm_types import Dimer, LadderSpec, SiteIndex
from .exceptions import ResourceCapError


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


Lattice = namedtuple('Lattice', ['spec', 'sites', 'edges'])


def site_index(leg, rung, legs):
    return SiteIndex.at(leg=leg, rung=rung, legs=legs)


def color(linear, legs):
    """Sublattice of a linear site index: 0 is A, 1 is B."""
    return SiteIndex.from_linear(linear, legs).color


def rung_sites(rung, legs):
    """Linear indices of the sites on `rung`, leg 1 first."""
    start = (rung - 1) * legs
    return tuple(range(start, start + legs))


def oriented(u, v, legs):
    """Returns the dimer between `u` and `v` running from A to B."""
    if color(u, legs) == 0:
        return Dimer(u, v)
    return Dimer(v, u)


def build_lattice(spec):
    """Returns the sites and nearest-neighbour bonds of `spec`.

    Every bond is a `Dimer` oriented from sublattice A to sublattice B.
    For a periodic ladder with two rungs the wrap bonds coincide with the
    chain bonds and are not repeated.
    """
    if not isinstance(spec, LadderSpec):
        spec = LadderSpec(*spec)
    M, N = spec.legs, spec.rungs

    sites = [site_index(leg, rung, M)
             for rung in range(1, N + 1)
             for leg in range(1, M + 1)]

    edges = []
    for rung in range(1, N + 1):
        for leg in range(1, M):
            edges.append(oriented(site_index(leg, rung, M).linear,
                                  site_index(leg + 1, rung, M).linear, M))
    for leg in range(1, M + 1):
        for rung in range(1, N):
            edges.append(oriented(site_index(leg, rung, M).linear,
                                  site_index(leg, rung + 1, M).linear, M))
        if spec.periodic and N > 2:
            edges.append(oriented(site_index(leg, N, M).linear,
                                  site_index(leg, 1, M).linear, M))

    logger.debug('Lattice {0}: {1} sites, {2} bonds'.format(
        spec, len(sites), len(edges)
    ))
    return Lattice(spec=spec, sites=sites, edges=edges)


def perfect_matchings(vertices, edges):
    """Generates every perfect matching of the graph (`vertices`, `edges`).

    The smallest unmatched vertex is always matched next, trying its
    partners in increasing order, so the output order is deterministic.
    Each matching is a tuple of the chosen edges, sorted.
    """
    vertices = sorted(vertices)
    if len(vertices) % 2:
        return

    members = set(vertices)
    adjacency = dict((v, []) for v in vertices)
    for edge in edges:
        u, v = edge
        if u in members and v in members:
            adjacency[u].append((v, edge))
            adjacency[v].append((u, edge))
    for v in adjacency:
        adjacency[v].sort()

    matched = set()
    chosen = []

    def search():
        pivot = None
        for v in vertices:
            if v not in matched:
                pivot = v
                break
        if pivot is None:
            yield tuple(sorted(chosen))
            return
        matched.add(pivot)
        for partner, edge in adjacency[pivot]:
            if partner in matched:
                continue
            matched.add(partner)
            chosen.append(edge)
            for matching in search():
                yield matching
            chosen.pop()
            matched.discard(partner)
        matched.discard(pivot)

    for matching in search():
        yield matching


def enumerate_coverings(spec, cap=DEFAULT_SITE_CAP):
    """Returns every dimer covering of the ladder `spec`."""
    lattice = build_lattice(spec)
    spec = lattice.spec
    if spec.sites > cap:
        raise ResourceCapError('sites', spec.sites, cap)
    if spec.sites % 2:
        return []
    coverings = list(perfect_matchings([s.linear for s in lattice.sites],
                                       lattice.edges))
    logger.debug('{0}: {1} coverings'.format(spec, len(coverings)))
    return coverings


def block_coverings(lattice, rungs):
    """Coverings of the sub-ladder made of `rungs`, at their positions.

    Only bonds with both ends on `rungs` are used, so a block spanning
    rungs N and 1 of a periodic ladder is covered through its wrap bonds.
    """
    M = lattice.spec.legs
    vertices = [s for r in rungs for s in rung_sites(r, M)]
    return list(perfect_matchings(vertices, lattice.edges))

# -*- coding: utf-8 -*-

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

import numpy

from dmrm.dm_types import (BOUNDARIES, AssembledRho, DensityMatrix,
                           GGMResult, LadderSpec, SiteIndex, enum)
from dmrm.exceptions import OddPeriodicError, ValidationError


class TestEnum(unittest.TestCase):
    def test_simple(self):
        e = enum(A='a', B='b')
        self.assertEqual(e.A, 'a')
        self.assertIn('b', e)
        self.assertNotIn('c', e)


class TestLadderSpec(unittest.TestCase):
    def test_simple(self):
        spec = LadderSpec(legs=3, rungs=4, periodic=True)
        self.assertEqual(spec.sites, 12)
        self.assertEqual(spec.boundary, BOUNDARIES.PERIODIC)
        self.assertEqual(str(spec), '3x4 periodic')
        self.assertEqual(LadderSpec(2, 3).boundary, BOUNDARIES.OPEN)

    def test_coerce(self):
        spec = LadderSpec('2', '4', 1)
        self.assertEqual(spec, (2, 4, True))

    def test_invalid(self):
        self.assertRaises(ValidationError, LadderSpec, 0, 4)
        self.assertRaises(ValidationError, LadderSpec, 2, 0)
        self.assertRaises(OddPeriodicError, LadderSpec, 2, 5, True)
        self.assertRaises(ValueError, LadderSpec, 2, 5, True)


class TestSiteIndex(unittest.TestCase):
    def test_round_trip(self):
        site = SiteIndex.at(leg=2, rung=3, legs=4)
        self.assertEqual(site.linear, 9)
        self.assertEqual(SiteIndex.from_linear(9, legs=4), site)

    def test_color(self):
        self.assertEqual(SiteIndex.at(leg=1, rung=1, legs=2).color, 0)
        self.assertEqual(SiteIndex.at(leg=2, rung=1, legs=2).color, 1)
        self.assertEqual(SiteIndex.at(leg=1, rung=2, legs=2).color, 1)


class TestDensityMatrix(unittest.TestCase):
    def test_exact(self):
        entries = numpy.array([[3, 1], [1, 1]], dtype=object)
        rho = DensityMatrix(kept_sites=[5], entries=entries)
        self.assertEqual(rho.kept_sites, (5,))
        self.assertTrue(rho.is_exact)
        self.assertEqual(rho.trace, 4)
        self.assertEqual(rho.dimension, 2)
        self.assertTrue(rho.is_symmetric())

        normalized = rho.normalized()
        self.assertFalse(normalized.is_exact)
        self.assertEqual(normalized.entries.tolist(),
                         [[0.75, 0.25], [0.25, 0.25]])
        self.assertEqual(normalized.trace, 1.0)

    def test_big_integers(self):
        big = 3 ** 60
        entries = numpy.array([[big, 0], [0, 2 * big]], dtype=object)
        normalized = DensityMatrix(kept_sites=(0,), entries=entries)\
            .normalized()
        self.assertAlmostEqual(normalized.entries[0, 0], 1 / 3)

    def test_shape(self):
        self.assertRaises(ValidationError,
                          DensityMatrix, kept_sites=(0, 1),
                          entries=numpy.identity(2))


class TestGGMResult(unittest.TestCase):
    def test_label(self):
        result = GGMResult(ggm=0.5, lambda_sq_max=0.5, argmax_subset=(0, 2),
                           subset_spectra={})
        self.assertEqual(result.subset_label, '0-2')


class TestAssembledRho(unittest.TestCase):
    def test_component(self):
        signs = numpy.array([1, -1])
        components = {'a': numpy.array([[1, 2], [2, 1]])}
        rho = DensityMatrix(kept_sites=(0,),
                            entries=components['a'] *
                            numpy.outer(signs, signs))
        assembled = AssembledRho(rho=rho, norm_check=2,
                                 components=components, signs=signs)
        self.assertEqual(assembled.rung_terms, {})
        self.assertEqual(assembled.component('a').tolist(),
                         [[1, -2], [-2, 1]])

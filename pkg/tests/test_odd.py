# -*- coding: utf-8 -*-

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

import numpy
import pytest

from dmrm.blocks import build_blocks, window_sites
from dmrm.dm_types import LadderSpec
from dmrm.exceptions import ParityError, ValidationError
from dmrm.odd import (assemble_rho2_open_odd, assemble_rho2_periodic_odd,
                      periodic_odd_norm, run_odd_recursion)
from dmrm.oracle import partial_trace, rvb_literal


def exact(matrix):
    return numpy.array(matrix, dtype=object)


class TestRunOddRecursion(unittest.TestCase):
    def test_norms(self):
        table = run_odd_recursion(build_blocks(3), 4)
        self.assertEqual(table.Z2, 44)
        self.assertEqual(table.z(0), 1)
        self.assertEqual(table.z(2), 44)
        self.assertEqual(table.z(4), 1936)
        self.assertEqual(run_odd_recursion(build_blocks(5), 2).Z2, 804)

    def test_norms_match_oracle(self):
        table = run_odd_recursion(build_blocks(3), 6)
        for k in (2, 4, 6):
            self.assertEqual(table.z(k),
                             rvb_literal(LadderSpec(3, k)).norm_sq)

    def test_ring_matrix(self):
        library = build_blocks(3)
        V = library.two_rung
        table = run_odd_recursion(library, 2)
        numpy.testing.assert_array_equal(table.omega, V.dot(V).dot(V))

    def test_parity(self):
        self.assertRaises(ParityError, run_odd_recursion, build_blocks(2), 2)
        self.assertRaises(ParityError, run_odd_recursion, build_blocks(3), 3)
        table = run_odd_recursion(build_blocks(3), 2)
        self.assertRaises(ParityError, table.z, 1)


class TestPeriodicOddNorm(unittest.TestCase):
    def test_matches_oracle(self):
        for legs, rungs in [(1, 4), (1, 6), (3, 4)]:
            state = rvb_literal(LadderSpec(legs, rungs, periodic=True))
            self.assertEqual(periodic_odd_norm(build_blocks(legs), rungs - 2),
                             state.norm_sq)

    def test_single_leg(self):
        # Two dimerizations of a ring, overlapping in one loop
        self.assertEqual(periodic_odd_norm(build_blocks(1), 4),
                         2 * 2 ** 3 + 2 * 2)


class TestAssemblePeriodicOdd(unittest.TestCase):
    def assertMatchesOracle(self, legs, rungs):
        spec = LadderSpec(legs, rungs, periodic=True)
        library = build_blocks(legs)
        n = rungs - 2
        assembled = assemble_rho2_periodic_odd(library,
                                               run_odd_recursion(library, n),
                                               n)
        state = rvb_literal(spec)
        oracle = partial_trace(state, window_sites(legs, n + 1))
        self.assertTrue(numpy.array_equal(exact(assembled.rho.entries),
                                          exact(oracle.entries)),
                        str(spec))
        self.assertEqual(assembled.norm_check, state.norm_sq)
        return assembled

    def test_single_leg(self):
        self.assertMatchesOracle(1, 4)
        self.assertMatchesOracle(1, 8)

    def test_three_legs(self):
        assembled = self.assertMatchesOracle(3, 4)
        self.assertEqual(list(assembled.components),
                         ['two_rung', 'rho_bar', 'omega'])
        self.assertTrue(assembled.rho.is_symmetric())

    @pytest.mark.slow
    def test_three_legs_eighteen_spins(self):
        self.assertMatchesOracle(3, 6)

    def test_invalid(self):
        library = build_blocks(3)
        table = run_odd_recursion(library, 2)
        self.assertRaises(ValidationError,
                          assemble_rho2_periodic_odd, library, table, 4)
        table = run_odd_recursion(library, 0)
        self.assertRaises(ParityError,
                          assemble_rho2_periodic_odd, library, table, 0)


class TestAssembleOpenOdd(unittest.TestCase):
    def test_matches_oracle(self):
        for legs, rungs in [(3, 4), (1, 6)]:
            library = build_blocks(legs)
            n = rungs - 2
            assembled = assemble_rho2_open_odd(
                library, run_odd_recursion(library, n), n
            )
            state = rvb_literal(LadderSpec(legs, rungs))
            oracle = partial_trace(state, window_sites(legs, n + 1))
            self.assertTrue(numpy.array_equal(exact(assembled.rho.entries),
                                              exact(oracle.entries)))
            self.assertEqual(assembled.norm_check, state.norm_sq)

    def test_whole_block(self):
        library = build_blocks(3)
        assembled = assemble_rho2_open_odd(library,
                                           run_odd_recursion(library, 0), 0)
        self.assertEqual(assembled.norm_check, 44)

    def test_parity(self):
        library = build_blocks(3)
        table = run_odd_recursion(library, 2)
        self.assertRaises(ParityError,
                          assemble_rho2_open_odd, library, table, 1)

# -*- coding: utf-8 -*-

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

import numpy
import pytest

from dmrm.blocks import (build_blocks, shifted_overlap_h, window_sites)
from dmrm.dm_types import LadderSpec
from dmrm.even import (assemble_rho2_open, assemble_rho2_periodic,
                       chain_term, exact_x_coefficients,
                       printed_x_coefficients, printed_z_sequence,
                       run_even_recursion, run_even_recursion_general)
from dmrm.exceptions import ParityError, ValidationError
from dmrm.lattice import oriented, rung_sites
from dmrm.oracle import (StateVector, covering_state, inner, partial_trace,
                         rvb_literal, tensor)


def exact(matrix):
    return numpy.array(matrix, dtype=object)


def rung_state(legs, rung, shift=0):
    """Signed |1> (or |1bar>) on `rung` of a ladder."""
    sites = rung_sites(rung, legs)
    dimers = [oriented(sites[(i + shift) % legs],
                       sites[(i + 1 + shift) % legs], legs)
              for i in range(0, legs - 1, 2)]
    return covering_state(dimers, sites)


def open_overlap(legs, k):
    """<k-1| |k> over rungs 1 .. k-1, as a state on rung k."""
    state = rvb_literal(LadderSpec(legs, k))
    shorter = rvb_literal(LadderSpec(legs, k - 1))
    sites = rung_sites(k, legs)
    amplitudes = {}
    for config in range(1 << legs):
        basis = StateVector(sites=sites, amplitudes={config: 1})
        amplitudes[config] = inner(state, tensor(shorter, basis))
    return StateVector(sites=sites, amplitudes=amplitudes)


def oracle_window(spec):
    state = rvb_literal(spec)
    return partial_trace(state, window_sites(spec.legs, spec.rungs - 1))


class TestRunEvenRecursion(unittest.TestCase):
    def test_two_legs(self):
        table = run_even_recursion(build_blocks(2), 2)
        self.assertEqual(table.Z[:3], [1, 2, 12])
        self.assertEqual(table.Y1[1], 2)
        self.assertEqual(table.Y2[1], 0)

    def test_four_legs(self):
        table = run_even_recursion(build_blocks(4), 2)
        self.assertEqual(table.Z[1], 4)
        self.assertEqual(table.Y1[1], 4)
        self.assertEqual(table.Y2[1], 2)
        self.assertEqual(table.g[1], 5)
        self.assertEqual(table.h[1], 1)
        self.assertEqual(table.gbar[1], 2)
        self.assertEqual(table.hbar[1], 3)

    def test_printed_index(self):
        library = build_blocks(2)
        self.assertEqual(printed_z_sequence(library, 2)[2], 8)
        self.assertNotEqual(printed_z_sequence(library, 2),
                            run_even_recursion(library, 2).Z)

    def test_norms_match_oracle(self):
        for legs, rungs in [(2, 8), (4, 4)]:
            table = run_even_recursion(build_blocks(legs), rungs)
            for k in range(1, rungs + 1):
                state = rvb_literal(LadderSpec(legs, k))
                self.assertEqual(table.Z[k], state.norm_sq,
                                 'M={0} k={1}'.format(legs, k))

    def test_channels_match_oracle(self):
        for legs, rungs in [(2, 6), (4, 3)]:
            table = run_even_recursion(build_blocks(legs), rungs)
            for k in range(2, rungs + 1):
                state = rvb_literal(LadderSpec(legs, k))
                shorter = rvb_literal(LadderSpec(legs, k - 1))
                self.assertEqual(
                    table.Y1[k],
                    inner(state, tensor(shorter, rung_state(legs, k)))
                )
                if legs > 2:
                    self.assertEqual(
                        table.Y2[k],
                        inner(state,
                              tensor(shorter, rung_state(legs, k, shift=1)))
                    )

    def test_amplitudes_match_oracle(self):
        for legs, rungs in [(2, 6), (4, 3)]:
            table = run_even_recursion(build_blocks(legs), rungs)
            for k in range(2, rungs + 1):
                expected = (rung_state(legs, k).scaled(table.A1[k]) +
                            rung_state(legs, k, shift=1).scaled(table.A2[k]))
                self.assertEqual(open_overlap(legs, k), expected,
                                 'M={0} k={1}'.format(legs, k))

    def test_xi(self):
        for legs in (2, 4):
            library = build_blocks(legs)
            table = run_even_recursion(library, 7)
            for k in range(1, 8):
                numpy.testing.assert_array_equal(
                    table.xi(library, k), library.contract(table.u[k])
                )

    def test_open_overlaps(self):
        library = build_blocks(4)
        table = run_even_recursion(library, 4)
        self.assertEqual(list(table.u[1]), list(library.one_rung))
        for k in range(1, 5):
            self.assertEqual(int(library.one_rung.dot(table.u[k])),
                             table.Y1[k])

    def test_sequences(self):
        table = run_even_recursion(build_blocks(4), 4)
        self.assertEqual(table.A1[1], 1)
        self.assertEqual(table.A1[2], table.Z[1] + 5)
        self.assertEqual(table.A2[1], 0)
        self.assertEqual(table.A2[2], 1)

    def test_parity(self):
        self.assertRaises(ParityError, run_even_recursion, build_blocks(3), 2)
        self.assertRaises(ValidationError,
                          run_even_recursion, build_blocks(2), 0)


class TestGeneralRecursion(unittest.TestCase):
    def test_reduces_to_two_channels(self):
        library = build_blocks(4)
        general = run_even_recursion_general(library, 6)
        table = run_even_recursion(library, 6)
        self.assertEqual(general.Z, table.Z)
        self.assertEqual(general.Y1, table.Y1)
        self.assertEqual(general.Y2, table.Y2)

    def test_six_legs(self):
        library = build_blocks(6)
        table = run_even_recursion(library, 3)
        self.assertEqual(table.Z[1], library.scalars['A'])
        for k in (1, 2, 3):
            state = rvb_literal(LadderSpec(6, k))
            self.assertEqual(table.Z[k], state.norm_sq)

    @pytest.mark.slow
    def test_six_legs_at_cap(self):
        table = run_even_recursion(build_blocks(6), 4)
        self.assertEqual(table.Z[4], rvb_literal(LadderSpec(6, 4)).norm_sq)


class TestShiftedOverlap(unittest.TestCase):
    def test_expansion(self):
        for legs in (2, 4):
            library = build_blocks(legs)
            basis = library.alpha_basis
            for n in range(2, 7):
                X = exact_x_coefficients(library, n)
                rebuilt = chain_term(library, n)
                for i, a in enumerate(basis):
                    for j, b in enumerate(basis):
                        rebuilt = rebuilt + X[i][j] * numpy.outer(a, b)
                numpy.testing.assert_array_equal(
                    rebuilt, shifted_overlap_h(library, n)
                )

    def test_chain_parity(self):
        library = build_blocks(2)
        self.assertFalse(chain_term(library, 3).any())
        self.assertTrue(chain_term(library, 4).any())

    def test_printed_x_coefficients(self):
        library = build_blocks(4)
        table = run_even_recursion(library, 5)
        # A(0) is zero, so a single rung has nothing to sum
        self.assertEqual(printed_x_coefficients(library, table, 1),
                         (0, 0, 0, 0))
        table = run_even_recursion(library, 6)
        for n in range(2, 7):
            exact_x = exact_x_coefficients(library, n)
            self.assertEqual(printed_x_coefficients(library, table, n),
                             tuple(x for row in exact_x for x in row))
        self.assertEqual(printed_x_coefficients(library, table, 6),
                         (83937, 5698, 5698, 426))

    def test_printed_x_coefficients_two_legs(self):
        library = build_blocks(2)
        table = run_even_recursion(library, 6)
        for n in range(2, 7):
            X = exact_x_coefficients(library, n)
            self.assertEqual(printed_x_coefficients(library, table, n),
                             (X[0][0], 0, 0, 0))


class TestAssembleOpen(unittest.TestCase):
    def assertMatchesOracle(self, legs, rungs):
        spec = LadderSpec(legs, rungs)
        library = build_blocks(legs)
        n = rungs - 2
        assembled = assemble_rho2_open(library,
                                       run_even_recursion(library, rungs), n)
        oracle = oracle_window(spec)
        self.assertEqual(assembled.rho.kept_sites, oracle.kept_sites)
        self.assertTrue(numpy.array_equal(exact(assembled.rho.entries),
                                          exact(oracle.entries)),
                        str(spec))
        return assembled

    def test_matches_oracle(self):
        self.assertMatchesOracle(2, 3)
        self.assertMatchesOracle(2, 4)
        self.assertMatchesOracle(2, 7)
        self.assertMatchesOracle(4, 3)
        self.assertMatchesOracle(4, 4)

    def test_trace(self):
        library = build_blocks(4)
        table = run_even_recursion(library, 6)
        assembled = assemble_rho2_open(library, table, 4)
        self.assertEqual(assembled.norm_check, table.Z[6])
        self.assertEqual(assembled.rho.trace, table.Z[6])

    def test_components(self):
        library = build_blocks(2)
        assembled = assemble_rho2_open(library,
                                       run_even_recursion(library, 5), 3)
        self.assertEqual(list(assembled.components),
                         ['two_rung', 'rho_bar', 'xi'])
        total = sum(assembled.component(name)
                    for name in assembled.components)
        numpy.testing.assert_array_equal(total, assembled.rho.entries)
        self.assertTrue(assembled.rho.is_symmetric())

    def test_short_table(self):
        library = build_blocks(2)
        table = run_even_recursion(library, 2)
        self.assertRaises(ValidationError,
                          assemble_rho2_open, library, table, 3)


class TestAssemblePeriodic(unittest.TestCase):
    def assertMatchesOracle(self, legs, rungs):
        spec = LadderSpec(legs, rungs, periodic=True)
        library = build_blocks(legs)
        assembled = assemble_rho2_periodic(
            library, run_even_recursion(library, rungs), rungs - 2
        )
        oracle = oracle_window(spec)
        self.assertTrue(numpy.array_equal(exact(assembled.rho.entries),
                                          exact(oracle.entries)),
                        str(spec))
        self.assertEqual(assembled.norm_check,
                         rvb_literal(spec).norm_sq)
        return assembled

    def test_two_legs(self):
        self.assertMatchesOracle(2, 4)
        self.assertMatchesOracle(2, 6)

    def test_four_legs(self):
        self.assertMatchesOracle(4, 4)

    @pytest.mark.slow
    def test_two_legs_sixteen_spins(self):
        self.assertMatchesOracle(2, 8)

    def test_rung_terms(self):
        library = build_blocks(2)
        assembled = assemble_rho2_periodic(library,
                                           run_even_recursion(library, 6), 4)
        self.assertEqual(set(assembled.rung_terms), set(['phi', 'eta',
                                                         'kappa']))
        self.assertEqual(list(assembled.components),
                         ['two_rung', 'rho_bar', 'xi', 'beta1', 'beta2'])
        self.assertTrue(assembled.rho.is_symmetric())

    def test_parity(self):
        library = build_blocks(2)
        table = run_even_recursion(library, 5)
        self.assertRaises(ParityError,
                          assemble_rho2_periodic, library, table, 3)

# -*- coding: utf-8 -*-

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import unittest

import numpy

from dmrm.blocks import (_reduced, block_vector, build_blocks,
                         close_alpha_basis, expand_in_rung_basis,
                         exact_vector, operator_pair,
                         rung_dimers, rung_pair, rung_signs, rung_state,
                         shifted_overlap_h, shifted_overlap_j,
                         transfer_contract, transfer_ring, two_rung_block,
                         window_signs, window_sites)
from dmrm.exceptions import (BasisIncompleteError, DimensionError,
                             ParityError, ResourceCapError, ValidationError)


class TestRungStates(unittest.TestCase):
    def test_two_legs(self):
        e = rung_state(rung_dimers(2), legs=2)
        self.assertEqual(list(e), [0, 1, 1, 0])

    def test_shifted_dimers(self):
        self.assertEqual(rung_dimers(4), ((0, 1), (2, 3)))
        self.assertEqual(rung_dimers(4, shift=1), ((2, 1), (0, 3)))

    def test_sign_free(self):
        for legs in (2, 4, 6):
            e = rung_state(rung_dimers(legs), legs)
            self.assertTrue(all(x >= 0 for x in e))
            self.assertEqual(sum(e), 2 ** (legs // 2))

    def test_two_rung_block(self):
        V = two_rung_block(3)
        self.assertTrue((V == V.T).all())
        self.assertTrue(all(x >= 0 for x in V.reshape(-1)))
        self.assertEqual(int((V * V).sum()), 44)


class TestExpansion(unittest.TestCase):
    def test_basis_element(self):
        library = build_blocks(4)
        self.assertEqual(
            expand_in_rung_basis(library.one_rung_bar, library.alpha_basis),
            [0, 1]
        )

    def test_contraction(self):
        library = build_blocks(4)
        self.assertEqual(
            expand_in_rung_basis(library.contract(library.one_rung),
                                 library.alpha_basis),
            [5, 1]
        )
        library = build_blocks(2)
        self.assertEqual(
            expand_in_rung_basis(library.contract(library.one_rung),
                                 library.alpha_basis),
            [1]
        )

    def test_outside_span(self):
        e = exact_vector([0, 1, 1, 0])
        self.assertRaises(BasisIncompleteError,
                          expand_in_rung_basis, exact_vector([1, 0, 0, 0]),
                          [e])
        self.assertRaises(BasisIncompleteError,
                          expand_in_rung_basis, e, [])

    def test_dimension(self):
        self.assertRaises(DimensionError,
                          expand_in_rung_basis, exact_vector([1, 0]),
                          [exact_vector([1, 0, 0, 0])])


class TestCloseAlphaBasis(unittest.TestCase):
    def test_reduced(self):
        self.assertEqual(list(_reduced(exact_vector([4, -6, 0, 10]))),
                         [2, -3, 0, 5])
        self.assertEqual(list(_reduced(exact_vector([3, 5]))), [3, 5])
        self.assertEqual(list(_reduced(exact_vector([0, 0]))), [0, 0])

    def test_sizes(self):
        self.assertEqual(len(build_blocks(2).alpha_basis), 1)
        self.assertEqual(len(build_blocks(4).alpha_basis), 2)
        self.assertGreaterEqual(len(build_blocks(6).alpha_basis), 2)

    def test_closed(self):
        library = build_blocks(6)
        W = library.two_rung_bar
        for b, coefficients in zip(library.alpha_basis, library.expansion):
            combination = sum(c * v for c, v in zip(coefficients,
                                                     library.alpha_basis))
            self.assertEqual(list(W.dot(b)), list(combination))

    def test_seeds_deduplicated(self):
        library = build_blocks(2)
        basis, expansion = close_alpha_basis(
            2, library.two_rung_bar, [library.one_rung, library.one_rung]
        )
        self.assertEqual(len(basis), 1)
        self.assertEqual(expansion, [[1]])


class TestBlockLibrary(unittest.TestCase):
    def assertScalars(self, legs, **expected):
        scalars = build_blocks(legs).scalars
        for name, value in expected.items():
            self.assertEqual(scalars[name], value, name)

    def test_two_legs(self):
        self.assertScalars(2, A=2, Abar=2, B=4, C=1, D=0, Cbar=0, Dbar=0,
                           Z2=12)

    def test_four_legs(self):
        self.assertScalars(4, A=4, Abar=2, C=5, D=1, Cbar=2, Dbar=3)

    def test_odd_legs(self):
        self.assertScalars(1, Z2=2)
        self.assertScalars(3, Z2=44)
        self.assertScalars(5, Z2=804)

    def test_bar_channel(self):
        self.assertFalse(build_blocks(2).bar_channel)
        self.assertTrue(build_blocks(4).bar_channel)

    def test_gram(self):
        library = build_blocks(4)
        self.assertEqual(library.gram, [[4, 2], [2, 4]])

    def test_rho_bar(self):
        library = build_blocks(4)
        self.assertEqual(sum(library.rho_bar.diagonal()),
                         library.scalars['B'])
        library = build_blocks(3)
        self.assertEqual(sum(library.rho_bar.diagonal()), 44)

    def test_odd_has_no_rung_states(self):
        library = build_blocks(3)
        self.assertRaises(ParityError, lambda: library.one_rung)
        self.assertRaises(ParityError, lambda: library.one_rung_bar)
        self.assertRaises(ParityError, lambda: library.two_rung_bar)

    def test_limits(self):
        self.assertRaises(ValidationError, build_blocks, 0)
        self.assertRaises(ResourceCapError, build_blocks, 8)
        self.assertRaises(ResourceCapError, build_blocks, 4, legs_cap=3)


class TestTransfer(unittest.TestCase):
    def test_single_block(self):
        V = two_rung_block(3)
        self.assertTrue((transfer_contract([V]) == V).all())

    def test_chain(self):
        V = two_rung_block(3)
        numpy.testing.assert_array_equal(transfer_contract([V, V, V]),
                                         V.dot(V).dot(V))

    def test_ring(self):
        V = two_rung_block(1)
        # V = [[0, 1], [1, 0]] for a single dimer
        self.assertEqual(transfer_ring([V, V]), 2)
        self.assertEqual(transfer_ring([V, V, V]), 0)

    def test_invalid(self):
        self.assertRaises(ValidationError, transfer_contract, [])
        self.assertRaises(DimensionError, transfer_contract,
                          [two_rung_block(1), two_rung_block(2)])


class TestShiftedOverlaps(unittest.TestCase):
    def test_shapes(self):
        library = build_blocks(2)
        self.assertEqual(shifted_overlap_h(library, 3).shape, (4, 4))
        self.assertEqual(shifted_overlap_j(library, 2).shape, (4, 4))

    def test_limits(self):
        library = build_blocks(2)
        self.assertRaises(ValidationError, shifted_overlap_h, library, 1)
        self.assertRaises(ValidationError, shifted_overlap_j, library, 0)


class TestWindowLayout(unittest.TestCase):
    def test_operator_pair(self):
        P = numpy.arange(16).reshape(4, 4)
        Q = numpy.arange(16, 32).reshape(4, 4)
        x = numpy.array([1, 2, 0, 3])
        y = numpy.array([2, 0, 1, 1])
        numpy.testing.assert_array_equal(
            operator_pair(P, Q).dot(rung_pair(x, y)),
            rung_pair(P.dot(x), Q.dot(y))
        )

    def test_block_vector(self):
        e = numpy.array([0, 1, 1, 0])
        numpy.testing.assert_array_equal(block_vector(numpy.outer(e, e)),
                                         rung_pair(e, e))
        V = numpy.arange(16).reshape(4, 4)
        # first rung is the fast index
        self.assertEqual(block_vector(V)[1 + 4 * 2], V[1, 2])

    def test_signs(self):
        self.assertEqual(list(rung_signs(2, 1)), [1, -1, 1, -1])
        self.assertEqual(list(rung_signs(2, 2)), [1, 1, -1, -1])
        signs = window_signs(2, 1)
        self.assertEqual(len(signs), 16)
        self.assertEqual(set(signs), set([1, -1]))

    def test_window_sites(self):
        self.assertEqual(window_sites(2, 3), (4, 5, 6, 7))

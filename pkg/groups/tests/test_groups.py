import itertools

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from groups.exceptions import InvalidGroupError, GroupElementError
from groups.models import GroupElement
from groups.utils import (
    make_group,
    parse_group,
    compose,
    inverse,
    regular_rep,
    character,
    characters,
    find_character,
)
from tensors.utils import is_unitary

small_factor_lists = st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=3) \
    .filter(lambda factors: int(np.prod(factors)) <= 8)


class MakeGroupTests(SimpleTestCase):

    def test_z2(self):
        group = make_group([2])
        self.assertEqual(group.order, 2)
        self.assertEqual(str(group), "Z2")

    def test_trivial_group(self):
        group = make_group([1])
        self.assertEqual(group.order, 1)
        self.assertEqual(group.elements, (GroupElement((0,)),))

    def test_klein_group_table(self):
        group = make_group([2, 2])
        self.assertEqual(group.order, 4)
        elements = group.elements
        for g, h in itertools.product(elements, repeat=2):
            self.assertIn(compose(group, g, h), elements)
            self.assertEqual(compose(group, g, h), compose(group, h, g))
        for g, h, k in itertools.product(elements, repeat=3):
            self.assertEqual(compose(group, compose(group, g, h), k), compose(group, g, compose(group, h, k)))

    def test_mixed_radix_enumeration(self):
        group = make_group([2, 3])
        self.assertEqual(group.element(0).coords, (0, 0))
        self.assertEqual(group.element(1).coords, (0, 1))
        self.assertEqual(group.element(3).coords, (1, 0))
        for i in range(group.order):
            self.assertEqual(group.index(group.element(i)), i)

    def test_empty_factors(self):
        with self.assertRaises(InvalidGroupError, msg="A group needs at least one cyclic factor"):
            make_group([])

    def test_zero_factor(self):
        with self.assertRaises(InvalidGroupError):
            make_group([2, 0])

    def test_parse_group(self):
        self.assertEqual(parse_group("2,2").factors, (2, 2))
        with self.assertRaises(InvalidGroupError):
            parse_group("two")

    def test_parse_group_rejects_empty_factors(self):
        self.assertEqual(parse_group(" 2, 3 ").factors, (2, 3))
        for spec in ("2,,2", "2,", ",2", ""):
            with self.subTest(spec=spec), self.assertRaises(InvalidGroupError):
                parse_group(spec)


class GroupLawTests(SimpleTestCase):

    def test_compose(self):
        self.assertEqual(compose(make_group([2]), 1, 1), GroupElement((0,)))
        self.assertEqual(compose(make_group([3]), 1, 2), GroupElement((0,)))
        self.assertEqual(compose(make_group([2, 2]), (1, 0), (0, 1)), GroupElement((1, 1)))

    def test_compose_dimension_mismatch(self):
        with self.assertRaises(GroupElementError):
            compose(make_group([2, 2]), (1,), (0, 1))

    def test_inverse(self):
        self.assertEqual(inverse(make_group([2]), 1), GroupElement((1,)))
        self.assertEqual(inverse(make_group([4]), 1), GroupElement((3,)))
        group = make_group([2, 3])
        g = GroupElement((1, 2))
        found = [x for x in group.elements if compose(group, g, x) == group.identity]
        self.assertEqual(found, [inverse(group, g)])
        self.assertEqual(inverse(group, g), GroupElement((1, 1)))

    @given(small_factor_lists)
    @settings(max_examples=30, deadline=None)
    def test_inverse_composes_to_identity(self, factors):
        group = make_group(factors)
        for g in group.elements:
            self.assertEqual(compose(group, g, inverse(group, g)), group.identity)


class RegularRepTests(SimpleTestCase):

    def test_z2_generator_is_pauli_x(self):
        np.testing.assert_array_equal(regular_rep(make_group([2]), 1), np.array([[0, 1], [1, 0]]))

    def test_identity_element(self):
        group = make_group([2, 3])
        np.testing.assert_array_equal(regular_rep(group, group.identity), np.eye(6))

    def test_z3_cyclic_permutation(self):
        group = make_group([3])
        rep = regular_rep(group, 1)
        for g in range(3):
            basis = np.zeros(3)
            basis[g] = 1
            expected = np.zeros(3)
            expected[(g - 1) % 3] = 1
            np.testing.assert_array_equal(rep @ basis, expected)

    @given(small_factor_lists)
    @settings(max_examples=30, deadline=None)
    def test_homomorphism(self, factors):
        group = make_group(factors)
        for g, h in itertools.product(group.elements, repeat=2):
            product = regular_rep(group, g) @ regular_rep(group, h)
            self.assertLess(np.linalg.norm(product - regular_rep(group, compose(group, g, h))), 1e-12)

    @given(small_factor_lists)
    @settings(max_examples=20, deadline=None)
    def test_permutation_and_unitary(self, factors):
        group = make_group(factors)
        for g in group.elements:
            rep = regular_rep(group, g)
            self.assertTrue(is_unitary(rep))
            np.testing.assert_array_equal(rep.sum(axis=0), np.ones(group.order))
            np.testing.assert_array_equal(rep.sum(axis=1), np.ones(group.order))


class CharacterTests(SimpleTestCase):

    @given(small_factor_lists)
    @settings(max_examples=30, deadline=None)
    def test_multiplicative(self, factors):
        group = make_group(factors)
        for chi in characters(group):
            self.assertAlmostEqual(chi(group.identity), 1.0, places=12)
            for g, h in itertools.product(group.elements, repeat=2):
                self.assertLess(abs(chi(compose(group, g, h)) - chi(g) * chi(h)), 1e-12)

    @given(small_factor_lists)
    @settings(max_examples=30, deadline=None)
    def test_orthogonality(self, factors):
        group = make_group(factors)
        for chi, psi in itertools.product(characters(group), repeat=2):
            overlap = sum(chi(g) * np.conj(psi(g)) for g in group.elements)
            expected = group.order if chi.label == psi.label else 0
            self.assertLess(abs(overlap - expected), 1e-10)

    def test_sign_character_of_z2(self):
        chi = character(make_group([2]), [1])
        self.assertAlmostEqual(chi(GroupElement((1,))), -1.0, places=12)

    def test_find_character_round_trip(self):
        group = make_group([2, 3])
        for chi in characters(group):
            self.assertEqual(find_character(group, chi.values()), chi)

    def test_find_character_rejects_non_multiplicative(self):
        group = make_group([4])
        self.assertIsNone(find_character(group, [1, 1j, 1, 1j]))
        self.assertIsNone(find_character(group, [1, 0.5, 1, 1]))

import itertools

import numpy as np
from django.test import SimpleTestCase
from scipy.stats import unitary_group

from circuits.gates import CNOT, H, rx
from frames.exceptions import FrameLabelInSupportError, IdenticalFramesError, LocalDimensionError
from frames.transform import (
    build_frame_change,
    inversion_relabeling,
    swap_matrix,
    transform_observable,
    transform_operator,
    verify_gate_transform,
)
from groups.utils import compose, inverse, make_group
from tensors.models import SystemLayout
from tensors.utils import I2, X, Z, basis_state, dagger, embed, is_unitary, kron, partial_trace, pure_density

Z2 = make_group([2])


def layout_for(group, labels="0iR"):
    return SystemLayout.uniform(tuple(labels), group.order)


class BuildFrameChangeTests(SimpleTestCase):

    def test_z2_c_to_b_closed_form(self):
        layout = SystemLayout.uniform(("C", "B", "A"), 2)
        fc = build_frame_change(layout, Z2, "C", "B")
        p0, p1 = np.diag([1, 0]), np.diag([0, 1])
        controlled = embed(layout, kron(p0, I2) + kron(p1, X), ("B", "A"))
        expected = embed(layout, swap_matrix(2), ("B", "C")) @ controlled
        self.assertLess(np.linalg.norm(fc.dense - expected), 1e-10)
        self.assertTrue(is_unitary(fc.dense))
        self.assertEqual(fc.registers, ("A",))
        self.assertEqual(fc.swap, ("C", "B"))

    def test_trivial_group_is_swap(self):
        group = make_group([1])
        fc = build_frame_change(layout_for(group), group, "0", "i")
        np.testing.assert_allclose(fc.dense, np.eye(1))
        self.assertEqual(len(fc.controlled_blocks), 1)

    def test_z3_basis_action(self):
        group = make_group([3])
        layout = layout_for(group)
        fc = build_frame_change(layout, group, "0", "i")
        for g0, gi, gk in itertools.product(range(3), repeat=3):
            image = fc.dense @ basis_state(layout, [g0, gi, gk])
            shifted = compose(group, gk, inverse(group, gi)).coords[0]
            np.testing.assert_array_equal(image, basis_state(layout, [gi, g0, shifted]))

    def test_identical_frames(self):
        with self.assertRaises(IdenticalFramesError):
            build_frame_change(layout_for(Z2), Z2, "0", "0")

    def test_mismatched_local_dims(self):
        layout = SystemLayout(("0", "i", "R"), (2, 2, 3))
        with self.assertRaises(LocalDimensionError, msg="Subsystem 'R' has local dimension 3"):
            build_frame_change(layout, Z2, "0", "i")

    def test_reverse_equals_adjoint_for_exponent_two(self):
        for factors in ([2], [2, 2]):
            group = make_group(factors)
            layout = layout_for(group)
            forward = build_frame_change(layout, group, "0", "i")
            backward = build_frame_change(layout, group, "i", "0")
            self.assertLess(np.linalg.norm(backward.dense - dagger(forward.dense)), 1e-10)

    def test_reverse_relabels_inverse_for_cyclic_groups(self):
        for factors in ([3], [4], [2, 3]):
            group = make_group(factors)
            layout = layout_for(group)
            forward = build_frame_change(layout, group, "0", "i")
            backward = build_frame_change(layout, group, "i", "0")
            j = inversion_relabeling(group)
            expected = embed(layout, j, ["i"]) @ dagger(forward.dense) @ embed(layout, j, ["0"])
            self.assertLess(np.linalg.norm(backward.dense - expected), 1e-10)

    def test_exact_inverse(self):
        for factors in ([2], [3], [4], [2, 2]):
            group = make_group(factors)
            fc = build_frame_change(layout_for(group), group, "0", "i")
            self.assertLess(np.linalg.norm(fc.inverse().dense @ fc.dense - np.eye(fc.layout.dim)), 1e-10)
            self.assertEqual(fc.inverse().old_frame, "i")
            self.assertFalse(fc.inverse().inverse().inverted)

    def test_dressed_change_shifts_old_frame(self):
        layout = SystemLayout.uniform("CAB", 2)
        fc = build_frame_change(layout, Z2, "C", "A", dress_old_frame=True)
        self.assertEqual(fc.targets, ("C", "B"))
        # |C=0, A=1, B=1>: both C and B flip, then C <-> A swap
        image = fc.dense @ basis_state(layout, [0, 1, 1])
        np.testing.assert_array_equal(image, basis_state(layout, [1, 1, 0]))

    def test_observable_expectation_preserved(self):
        rng = np.random.default_rng(11)
        fc = build_frame_change(layout_for(Z2, "0iRS"), Z2, "0", "i")
        psi = unitary_group.rvs(16, random_state=rng)[:, 0]
        observable = embed(fc.layout, kron(Z, X), ["i", "S"])
        before = np.vdot(psi, observable @ psi)
        after = np.vdot(fc.dense @ psi, transform_observable(fc, observable) @ (fc.dense @ psi))
        self.assertAlmostEqual(before, after, places=12)


class TransformOperatorTests(SimpleTestCase):

    def setUp(self):
        self.fc = build_frame_change(layout_for(Z2), Z2, "0", "i")

    def test_rotation_blocks_equal(self):
        controlled = transform_operator(self.fc, rx(0.4), ["R"])
        self.assertEqual(len(controlled.blocks), 2)
        self.assertEqual(controlled.distinct_blocks(), 1)

    def test_z_becomes_z_z(self):
        controlled = transform_operator(self.fc, Z, ["R"])
        np.testing.assert_allclose(controlled.blocks[1][1], -Z, atol=1e-12)
        np.testing.assert_allclose(controlled.local_dense(), kron(Z, Z), atol=1e-12)

    def test_hadamard_blocks(self):
        controlled = transform_operator(self.fc, H, ["R"])
        np.testing.assert_allclose(controlled.blocks[0][1], H, atol=1e-12)
        np.testing.assert_allclose(controlled.blocks[1][1], (X - Z) / np.sqrt(2), atol=1e-12)
        self.assertEqual(controlled.control, "0")
        self.assertEqual(controlled.spectators, ("i",))

    def test_rejects_frame_support(self):
        with self.assertRaises(FrameLabelInSupportError):
            transform_operator(self.fc, H, ["i"])
        with self.assertRaises(FrameLabelInSupportError):
            transform_operator(self.fc, CNOT, ["0", "R"])


class GateTransformOracleTests(SimpleTestCase):

    def test_hadamard_residual(self):
        fc = build_frame_change(layout_for(Z2), Z2, "0", "i")
        self.assertLess(verify_gate_transform(fc, H, ["R"]), 1e-10)

    def test_identity_residual(self):
        for factors in ([2], [3], [2, 2]):
            group = make_group(factors)
            fc = build_frame_change(layout_for(group), group, "0", "i")
            self.assertLess(verify_gate_transform(fc, np.eye(group.order), ["R"]), 1e-12)

    def test_random_unitaries_all_groups(self):
        rng = np.random.default_rng(2024)
        for factors in ([2], [3], [4], [2, 2]):
            group = make_group(factors)
            fc = build_frame_change(layout_for(group), group, "0", "i")
            for _ in range(100):
                u = unitary_group.rvs(group.order, random_state=rng)
                self.assertLess(verify_gate_transform(fc, u, ["R"]), 1e-10)

    def test_two_register_support(self):
        rng = np.random.default_rng(5)
        fc = build_frame_change(layout_for(Z2, "0iRS"), Z2, "0", "i")
        for _ in range(20):
            u = unitary_group.rvs(4, random_state=rng)
            self.assertLess(verify_gate_transform(fc, u, ["S", "R"]), 1e-10)

    def test_dressed_and_inverse_changes(self):
        rng = np.random.default_rng(9)
        for factors in ([2], [3]):
            group = make_group(factors)
            fc = build_frame_change(layout_for(group, "0iRS"), group, "0", "i", dress_old_frame=True)
            for candidate in (fc, fc.inverse(), build_frame_change(fc.layout, group, "0", "i").inverse()):
                u = unitary_group.rvs(group.order, random_state=rng)
                self.assertLess(verify_gate_transform(candidate, u, ["R"]), 1e-10)

    def test_spectators_untouched(self):
        rng = np.random.default_rng(17)
        fc = build_frame_change(layout_for(Z2, "0iRS"), Z2, "0", "i")
        u = unitary_group.rvs(2, random_state=rng)
        dense = transform_operator(fc, u, ["R"]).dense()
        for _ in range(10):
            v = unitary_group.rvs(16, random_state=rng)
            spectator = pure_density(v[:, 0][:2] / np.linalg.norm(v[:, 0][:2]))
            rest = pure_density(v[:, 1][:8] / np.linalg.norm(v[:, 1][:8]))
            # layout order 0, i, R, S with S as the spectator
            rho = kron(rest, spectator)
            evolved = dense @ rho @ dagger(dense)
            np.testing.assert_allclose(partial_trace(fc.layout, evolved, ["S"]), spectator, atol=1e-10)
            np.testing.assert_allclose(partial_trace(fc.layout, evolved, ["i", "S"]),
                                       partial_trace(fc.layout, rho, ["i", "S"]), atol=1e-10)

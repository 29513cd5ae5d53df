import math

import numpy as np
import pytest
from conftest import SX, SY, SZ, expm_herm, fid4

from qubit_bundle import (
    IDENTITY_ROTATION,
    SINGLET,
    AxisAngleRotation,
    BlochPair,
    BlochPoint,
    LocalUnitaryPair,
    StratumError,
    TwoQubitState,
    apply_local,
    bell_table,
    compose_unentangled,
    concurrence,
    factor_unentangled,
    fidelity,
    rotation_distance,
    rotation_from_state,
    state_from_rotation,
    su2_from_axis_angle,
)
from qubit_bundle.sampling import haar_su2, random_rotation

SQ2 = 1.0 / math.sqrt(2.0)
NORTH = BlochPoint(0.0)
SOUTH = BlochPoint(math.pi)


class TestUnentangled:
    def test_plus_plus(self):
        pair = factor_unentangled(TwoQubitState([1, 0, 0, 0]))
        assert pair.q1.theta == pytest.approx(0.0, abs=1e-12)
        assert pair.q2.theta == pytest.approx(0.0, abs=1e-12)

    def test_plus_minus(self):
        pair = factor_unentangled(TwoQubitState([0, 1, 0, 0]))
        assert pair.q1.theta == pytest.approx(0.0, abs=1e-12)
        assert pair.q2.theta == pytest.approx(math.pi, abs=1e-12)

    def test_equatorial_product(self):
        # ((1, i)/sqrt2) (x) ((1, 1)/sqrt2)
        state = TwoQubitState(np.kron([SQ2, 1j * SQ2], [SQ2, SQ2]))
        pair = factor_unentangled(state)
        assert pair.q1.theta == pytest.approx(math.pi / 2, abs=1e-9)
        assert pair.q1.phi == pytest.approx(math.pi / 2, abs=1e-9)
        assert pair.q2.theta == pytest.approx(math.pi / 2, abs=1e-9)
        assert pair.q2.phi == pytest.approx(0.0, abs=1e-9)

    def test_compose_north_north(self):
        state = compose_unentangled(BlochPair(NORTH, NORTH))
        np.testing.assert_allclose(state.amplitudes, [1, 0, 0, 0], atol=1e-15)

    def test_compose_south_north(self):
        state = compose_unentangled(BlochPair(SOUTH, NORTH))
        np.testing.assert_allclose(state.amplitudes, [0, 0, 1, 0], atol=1e-15)

    def test_compose_concurrence_zero(self, rng):
        for _ in range(200):
            pair = BlochPair(
                BlochPoint(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)),
                BlochPoint(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)),
            )
            assert concurrence(compose_unentangled(pair)) < 1e-12

    def test_round_trip(self, rng):
        for _ in range(1000):
            pair = BlochPair(
                BlochPoint(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)),
                BlochPoint(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)),
            )
            state = compose_unentangled(pair)
            back = compose_unentangled(factor_unentangled(state))
            assert fidelity(state, back) >= 1 - 1e-10

    def test_rejects_entangled(self):
        with pytest.raises(StratumError, match="not a product state"):
            factor_unentangled(SINGLET)


class TestRotationStates:
    def test_identity_gives_singlet(self):
        state = state_from_rotation(IDENTITY_ROTATION)
        assert fidelity(state, SINGLET) == pytest.approx(1.0, abs=1e-12)

    def test_pi_about_x(self):
        state = state_from_rotation(AxisAngleRotation(np.array([1.0, 0, 0]), math.pi))
        target = TwoQubitState(np.array([1, 0, 0, -1]) / math.sqrt(2))
        assert fidelity(state, target) == pytest.approx(1.0, abs=1e-12)

    def test_concurrence_always_one(self, rng):
        for _ in range(200):
            state = state_from_rotation(random_rotation(rng))
            assert concurrence(state) == pytest.approx(1.0, abs=1e-12)

    def test_matches_independent_kron_oracle(self, rng):
        for _ in range(100):
            rot = random_rotation(rng)
            u = expm_herm(
                rot.axis[0] * SX + rot.axis[1] * SY + rot.axis[2] * SZ, rot.angle / 2
            )
            expected = np.kron(u, np.eye(2)) @ SINGLET.amplitudes
            assert fid4(state_from_rotation(rot).amplitudes, expected) > 1 - 1e-12


class TestRotationFromState:
    def test_singlet_maps_to_identity(self):
        rot = rotation_from_state(SINGLET)
        assert rot.angle == 0.0
        np.testing.assert_allclose(rot.axis, [0, 0, 1])

    def test_x_bell_state(self):
        state = TwoQubitState(np.array([1, 0, 0, -1]) / math.sqrt(2))
        rot = rotation_from_state(state)
        assert rot.angle == pytest.approx(math.pi, abs=1e-12)
        np.testing.assert_allclose(rot.axis, [1, 0, 0], atol=1e-12)

    def test_round_trip(self, rng):
        for _ in range(2000):
            rot = random_rotation(rng)
            back = rotation_from_state(state_from_rotation(rot))
            assert rotation_distance(rot, back) < 1e-8

    def test_global_phase_invariant(self, rng):
        for _ in range(100):
            rot = random_rotation(rng)
            state = state_from_rotation(rot)
            rotated = TwoQubitState(state.amplitudes * np.exp(1j * rng.uniform(0, 2 * math.pi)))
            assert rotation_distance(rot, rotation_from_state(rotated)) < 1e-8

    def test_both_lifts_collapse(self, rng):
        eye = np.eye(2)
        for _ in range(200):
            rot = random_rotation(rng)
            u = su2_from_axis_angle(rot.axis, rot.angle)
            plus = apply_local(LocalUnitaryPair(u, eye), SINGLET)
            minus = apply_local(LocalUnitaryPair(-u, eye), SINGLET)
            assert fidelity(plus, minus) == pytest.approx(1.0, abs=1e-12)
            assert (
                rotation_distance(rotation_from_state(plus), rotation_from_state(minus))
                < 1e-8
            )

    def test_rejects_wrong_stratum(self):
        with pytest.raises(StratumError):
            rotation_from_state(TwoQubitState([1, 0, 0, 0]))


class TestBellTable:
    def test_four_rows(self):
        table = bell_table()
        assert [name for name, _, _ in table] == [
            "singlet",
            "pi-about-x",
            "pi-about-y",
            "pi-about-z",
        ]

    def test_assignments(self):
        # singlet and the x row are fixed; the y and z rows were computed
        # once with the kron oracle in TestRotationStates and frozen here
        targets = {
            "singlet": [0, SQ2, -SQ2, 0],
            "pi-about-x": [SQ2, 0, 0, -SQ2],
            "pi-about-y": [SQ2, 0, 0, SQ2],
            "pi-about-z": [0, SQ2, SQ2, 0],
        }
        for name, rotation, state in bell_table():
            assert fid4(state.amplitudes, targets[name]) > 1 - 1e-10

    def test_rotations_are_pi_about_axes(self):
        table = dict((name, rot) for name, rot, _ in bell_table())
        assert table["singlet"].angle == 0.0
        for name, axis in (
            ("pi-about-x", [1, 0, 0]),
            ("pi-about-y", [0, 1, 0]),
            ("pi-about-z", [0, 0, 1]),
        ):
            assert table[name].angle == pytest.approx(math.pi)
            np.testing.assert_allclose(table[name].axis, axis)


class TestInvarianceProperties:
    def test_axis_rotation_invariance(self, rng):
        # the state of (n, phi) is fixed by identical rotations about n
        for _ in range(100):
            rot = random_rotation(rng)
            state = state_from_rotation(rot)
            for _ in range(5):
                u = su2_from_axis_angle(rot.axis, rng.uniform(-math.pi, math.pi))
                moved = apply_local(LocalUnitaryPair(u, u), state)
                assert fidelity(state, moved) > 1 - 1e-10

    def test_singlet_universality(self, rng):
        for _ in range(1000):
            u = haar_su2(rng)
            moved = apply_local(LocalUnitaryPair(u, u), SINGLET)
            assert fidelity(SINGLET, moved) > 1 - 1e-10

    def test_non_singlet_bell_states_lack_universality(self, rng):
        for name, _, state in bell_table():
            if name == "singlet":
                continue
            worst = 0.0
            for _ in range(100):
                u = haar_su2(rng)
                moved = apply_local(LocalUnitaryPair(u, u), state)
                worst = max(worst, 1 - fidelity(state, moved))
            assert worst > 1e-3


class TestAxisAngleRotation:
    def test_zero_angle_axis_canonical(self):
        rot = AxisAngleRotation(np.array([0, 1.0, 0]), 0.0)
        np.testing.assert_allclose(rot.axis, [0, 0, 1])

    def test_pi_angle_sign_canonical(self):
        rot = AxisAngleRotation(np.array([-1.0, 0, 0]), math.pi)
        np.testing.assert_allclose(rot.axis, [1, 0, 0])
        rot = AxisAngleRotation(np.array([0.0, -0.6, 0.8]), math.pi)
        np.testing.assert_allclose(rot.axis, [0.0, 0.6, -0.8], atol=1e-12)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError, match="unit"):
            AxisAngleRotation(np.array([1.0, 1.0, 0.0]), 0.5)
        with pytest.raises(ValueError, match="angle"):
            AxisAngleRotation(np.array([1.0, 0, 0]), 3.5)

    def test_three_degrees_of_freedom(self):
        rot = AxisAngleRotation(np.array([0, 1.0, 0]), 0.8)
        # unit axis: 2 free parameters, plus the angle
        assert rot.axis.size - 1 + 1 == 3
        assert np.linalg.norm(rot.axis) == pytest.approx(1.0, abs=1e-12)

    def test_bloch_pair_four_reals(self):
        pair = BlochPair(BlochPoint(0.3, 0.2), BlochPoint(0.4, 0.1))
        payload = (pair.q1.theta, pair.q1.phi, pair.q2.theta, pair.q2.phi)
        assert len(payload) == 4
        assert all(isinstance(x, float) for x in payload)


class TestRotationDistance:
    def test_zero_for_identical(self, rng):
        for _ in range(50):
            rot = random_rotation(rng)
            assert rotation_distance(rot, rot) == pytest.approx(0.0, abs=1e-12)

    def test_axis_negation_at_pi_is_identified(self):
        a = AxisAngleRotation(np.array([0.0, 0.6, 0.8]), math.pi)
        b = AxisAngleRotation(np.array([0.0, -0.6, -0.8]), math.pi)
        assert rotation_distance(a, b) == pytest.approx(0.0, abs=1e-12)

    def test_known_z_rotations(self):
        a = AxisAngleRotation(np.array([0, 0, 1.0]), math.pi / 2)
        b = AxisAngleRotation(np.array([0, 0, 1.0]), math.pi / 4)
        assert rotation_distance(a, b) == pytest.approx(math.pi / 4, abs=1e-12)

    def test_symmetric(self, rng):
        a, b = random_rotation(rng), random_rotation(rng)
        assert rotation_distance(a, b) == pytest.approx(rotation_distance(b, a), abs=1e-12)

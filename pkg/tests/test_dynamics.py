import math

import numpy as np
import pytest
import scipy.linalg
from conftest import SX, SY, SZ

from qubit_bundle import (
    BundleCoords,
    Chart,
    HermitianGenerator,
    Stratum,
    TwoQubitState,
    concurrence,
    continuity_report,
    coordinate_trajectory,
    evolve,
    fidelity,
    local_hamiltonian,
    reconstruct,
    standard_state,
)
from qubit_bundle.sampling import haar_state, random_partial_state

SQ2 = 1.0 / math.sqrt(2.0)


def random_hermitian(rng, scale=1.0):
    z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    return HermitianGenerator(scale * 0.5 * (z + z.conj().T))


class TestHermitianGenerator:
    def test_rejects_non_hermitian(self):
        m = np.zeros((4, 4), dtype=complex)
        m[0, 1] = 1.0
        with pytest.raises(ValueError, match="Hermitian"):
            HermitianGenerator(m)

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="4x4"):
            HermitianGenerator(np.eye(2))

    def test_local_builder(self):
        h = local_hamiltonian(SX, SZ)
        np.testing.assert_allclose(
            h.matrix, np.kron(SX, np.eye(2)) + np.kron(np.eye(2), SZ), atol=1e-15
        )


class TestEvolve:
    def test_zero_generator_constant(self, rng):
        initial = haar_state(rng)
        for t, state in evolve(HermitianGenerator(np.zeros((4, 4))), initial, 0, 1, 0.1):
            assert fidelity(state, initial) == pytest.approx(1.0, abs=1e-13)

    def test_grid(self):
        states = evolve(HermitianGenerator(np.zeros((4, 4))), standard_state(0.3), 0.5, 1.0, 0.1)
        np.testing.assert_allclose([t for t, _ in states], [0.5, 0.6, 0.7, 0.8, 0.9, 1.0])

    def test_diagonal_generator_closed_form(self, rng):
        # diagonal H: every amplitude acquires the phase exp(-i h_k t)
        diag = rng.standard_normal(4)
        h = HermitianGenerator(np.diag(diag).astype(complex))
        initial = haar_state(rng)
        for t, state in evolve(h, initial, 0.0, 2.0, 0.25):
            expected = np.exp(-1j * diag * t) * initial.amplitudes
            np.testing.assert_allclose(state.amplitudes, expected, atol=1e-12)

    def test_concurrence_constant_iff_diagonal_is_local_z_sum(self, rng):
        initial = haar_state(rng)
        # local z sum: h0 + h3 = h1 + h2
        local = HermitianGenerator(np.diag([1.3, 0.4, 1.1, 0.2]).astype(complex))
        drift = max(
            abs(concurrence(s) - concurrence(initial))
            for _, s in evolve(local, initial, 0, 3, 0.1)
        )
        assert drift < 1e-12
        lopsided = HermitianGenerator(np.diag([1.3, 0.4, 1.1, 0.9]).astype(complex))
        drift = max(
            abs(concurrence(s) - concurrence(initial))
            for _, s in evolve(lopsided, initial, 0, 3, 0.1)
        )
        assert drift > 1e-3

    def test_matches_series_oracle_at_small_times(self, rng):
        h = random_hermitian(rng)
        initial = haar_state(rng)
        t = 1e-3
        terms = [np.eye(4, dtype=complex)]
        for k in range(1, 12):
            terms.append(terms[-1] @ (-1j * t * h.matrix) / k)
        series = sum(terms) @ initial.amplitudes
        (_, state), = evolve(h, initial, 0.0, t, t)[-1:]
        assert abs(np.vdot(series, state.amplitudes)) ** 2 > 1 - 1e-12

    def test_matches_scipy_expm(self, rng):
        h = random_hermitian(rng)
        initial = haar_state(rng)
        for t, state in evolve(h, initial, 0.0, 2.0, 0.5):
            expected = scipy.linalg.expm(-1j * h.matrix * t) @ initial.amplitudes
            assert abs(np.vdot(expected, state.amplitudes)) ** 2 > 1 - 1e-10

    def test_norm_drift_bounded(self, rng):
        h = random_hermitian(rng, scale=3.0)
        drift = max(
            abs(s.norm - 1.0) for _, s in evolve(h, haar_state(rng), 0.0, 50.0, 0.05)
        )
        assert drift < 1e-10

    def test_validates_arguments(self, rng):
        h = random_hermitian(rng)
        s = haar_state(rng)
        with pytest.raises(ValueError, match="dt"):
            evolve(h, s, 0.0, 1.0, -0.1)
        with pytest.raises(ValueError, match="t1"):
            evolve(h, s, 1.0, 0.5, 0.1)


class TestCoordinateTrajectory:
    def test_constant_input_single_chart(self, rng):
        state = random_partial_state(rng)
        trajectory = coordinate_trajectory([(0.1 * k, state) for k in range(20)])
        assert len(trajectory) == 20
        charts = {p.coords.chart for p in trajectory}
        assert len(charts) == 1
        assert not trajectory.events
        report = continuity_report(trajectory)
        assert report.max_within_chart_step == pytest.approx(0.0, abs=1e-12)

    def test_standard_state_sweep(self):
        # eta sweeping with base points pinned at the poles: gamma stays 0 and
        # the concurrence column is sin(eta)
        etas = np.linspace(0.1, math.pi / 2 - 0.1, 200)
        states = [(float(k), standard_state(eta)) for k, eta in enumerate(etas)]
        trajectory = coordinate_trajectory(states)
        for point, eta in zip(trajectory, etas):
            assert point.stratum is Stratum.PARTIAL
            assert point.coords.theta1 == pytest.approx(0.0, abs=1e-9)
            assert point.coords.theta2 == pytest.approx(0.0, abs=1e-9)
            assert abs(point.coords.gamma) < 1e-9
            assert point.concurrence == pytest.approx(math.sin(eta), abs=1e-12)

    def test_local_evolution_keeps_concurrence(self, rng):
        h = local_hamiltonian(0.9 * SY + 0.4 * SX, 1.3 * SZ)
        initial = random_partial_state(rng)
        states = evolve(h, initial, 0.0, 3.0, 0.003)
        trajectory = coordinate_trajectory(states)
        reference = concurrence(initial)
        assert max(abs(p.concurrence - reference) for p in trajectory) < 1e-9

    def test_generic_evolution_continuity(self, rng):
        h = random_hermitian(rng)
        scale = float(np.linalg.norm(h.matrix, 2))
        dt = 0.004 / scale
        states = evolve(h, random_partial_state(rng), 0.0, 400 * dt, dt)
        assert min(fidelity(a, b) for (_, a), (_, b) in zip(states, states[1:])) > 1 - 1e-4
        trajectory = coordinate_trajectory(states)
        report = continuity_report(trajectory)
        assert report.max_within_chart_step < 0.1

    def test_pole_crossing_switches_chart_consistently(self):
        # qubit 1 sweeps through the north pole; one sample lands inside the
        # pole guard, forcing a hysteresis switch whose fibre angle must obey
        # the transition law at the switch sample
        theta0 = 2.6
        initial = reconstruct(
            BundleCoords(
                chart=Chart.SN, eta=0.5, theta1=theta0, phi1=0.0,
                theta2=1.0, phi2=0.7, gamma=0.3,
            )
        )
        h = local_hamiltonian(0.5 * SY, np.zeros((2, 2)))
        t_cross = 2.0 * (2.0 * math.pi - theta0)
        steps = 736
        dt = (t_cross - 2e-7) / steps
        states = evolve(h, initial, 0.0, steps * dt, dt)
        trajectory = coordinate_trajectory(states)
        switches = [e for e in trajectory.events if e.kind == "chart-switch"]
        assert len(switches) == 1
        assert switches[0].before == "SN"
        assert switches[0].after == "NN"
        assert switches[0].gamma_mismatch is not None
        assert switches[0].gamma_mismatch < 1e-6
        # concurrence untouched by the local evolution
        assert max(abs(p.concurrence - math.sin(0.5)) for p in trajectory) < 1e-9

    def test_stratum_crossing_recorded(self):
        # cos(t)|++> - i sin(t)|-->: concurrence |sin 2t| crosses 0 at pi/2
        h = HermitianGenerator(np.kron(SX, SX).astype(complex))
        initial = TwoQubitState([1, 0, 0, 0])
        states = evolve(h, initial, 0.0, 3.0, 0.005)
        trajectory = coordinate_trajectory(states)
        kinds = {e.kind for e in trajectory.events}
        assert "stratum-change" in kinds
        strata = {p.stratum for p in trajectory}
        assert Stratum.PARTIAL in strata
        assert Stratum.FULL in strata or Stratum.UNENTANGLED in strata
        assert any(p.near_boundary for p in trajectory)
        # concurrence column tracks |sin(2t)|
        for point in trajectory:
            assert point.concurrence == pytest.approx(
                abs(math.sin(2 * point.t)), abs=1e-9
            )

    def test_rejects_coarse_sampling(self, rng):
        h = random_hermitian(rng, scale=4.0)
        states = evolve(h, haar_state(rng), 0.0, 5.0, 1.0)
        with pytest.raises(ValueError, match="decrease dt"):
            coordinate_trajectory(states)

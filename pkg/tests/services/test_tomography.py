import unittest

import numpy as np
from hypothesis import assume, given

# Module to test
from src.services import tomography
from src.services.bloch_core import (
    PATH_OPERATORS,
    SPIN_OPERATORS,
    axis_vector,
    coefficients_from_state,
    spin_projector,
    state_eigenvalues,
    state_from_coefficients,
)
from src.services.dynamics.extended import evolve_extended
from src.services.generator.params import GeneratorParams
from src.services.interferometer.beam import path_projector, singlet
from src.services.positivity import PositivityClass, classify
from src.utils.error_utils import MissingSettingError, SamplingError, ValidationError
from tests.strategies import density_matrices, hermitian_matrices


def _unit_trace_hermitian(h: np.ndarray) -> np.ndarray:
    """0.25 I plus a traceless perturbation of size 0.2: unit trace, not necessarily positive."""
    h = h - np.trace(h) / 4.0 * np.eye(4)
    return 0.25 * np.eye(4) + 0.2 * h / np.abs(h).max()


class TestTomography(unittest.TestCase):

    @given(density_matrices(4))
    def test_exact_round_trip_of_states(self, rho):
        """Reconstruction from exact expectations recovers density matrices."""
        coefficients = tomography.reconstruct(tomography.simulate_record(rho))
        np.testing.assert_allclose(state_from_coefficients(coefficients), rho, atol=1e-12)

    @given(hermitian_matrices(4))
    def test_exact_round_trip_of_non_positive_matrices(self, h):
        """Linear inversion also recovers unit-trace hermitian matrices that are not states."""
        assume(np.abs(h - np.trace(h) / 4.0 * np.eye(4)).max() > 1e-6)
        rho = _unit_trace_hermitian(h)
        coefficients = tomography.reconstruct(tomography.simulate_record(rho))
        np.testing.assert_allclose(state_from_coefficients(coefficients), rho, atol=1e-12)

    def test_decompositions_rebuild_basis_operators(self):
        """Beam-splitter and analyzer projectors combine into P_i and Q_j."""
        for i, terms in tomography._PATH_DECOMPOSITION.items():
            built = sum(w * path_projector(j, theta, phi) for w, (theta, phi), j in terms)
            np.testing.assert_allclose(built, PATH_OPERATORS[i - 1], atol=1e-15)
        for j, terms in tomography._SPIN_DECOMPOSITION.items():
            built = sum(w * spin_projector(axis_vector(axis)) for w, axis in terms)
            np.testing.assert_allclose(built, SPIN_OPERATORS[j - 1], atol=1e-15)

    def test_singlet_reference_expectations(self):
        """Singlet at t = 0: O^{1,z}(0, 0) = 1/2 and O^{1,-z}(0, 0) = 0."""
        rec = tomography.simulate_record(singlet())
        self.assertAlmostEqual(rec.get(0.0, 0.0, 1, "+z"), 0.5, places=15)
        self.assertAlmostEqual(rec.get(0.0, 0.0, 1, "-z"), 0.0, places=15)
        self.assertEqual(len(rec.rows()), 36)

    def test_evolved_singlet_coefficients(self):
        """gamma=0.2, a=0.05, t=1: E- = 0.082420 and |F| = 0.452419 from the reconstruction."""
        p = GeneratorParams.diagonal(a=0.05, gamma=0.2, omega=1.0)
        rho = evolve_extended(p, singlet(), 1.0)
        rec = tomography.simulate_record(rho)
        self.assertTrue(rec.is_physical)
        coefficients = tomography.reconstruct(rec)
        self.assertAlmostEqual(coefficients[0, 0].real, 0.082420, places=6)
        self.assertAlmostEqual(abs(coefficients[2, 3]), 0.452419, places=6)
        np.testing.assert_allclose(coefficients, coefficients_from_state(rho), atol=1e-12)

    def test_shot_noise_reconstruction(self):
        """Multinomial frequencies reconstruct the state to shot-noise accuracy."""
        rho = evolve_extended(GeneratorParams.diagonal(a=0.15, gamma=0.2, omega=1.0), singlet(), 0.7)
        rec = tomography.simulate_record(rho, shots=200000, seed=8)
        self.assertEqual(rec.shots, 200000)
        error = np.abs(tomography.reconstruct(rec) - coefficients_from_state(rho)).max()
        self.assertLess(error, 0.01)

    def test_shot_noise_shrinks_as_inverse_square_root(self):
        """A hundred times more shots cuts the rms reconstruction error about tenfold."""
        rho = evolve_extended(GeneratorParams.diagonal(a=0.15, gamma=0.2, omega=1.0), singlet(), 0.7)
        exact = coefficients_from_state(rho)

        def rms_error(shots):
            errors = [tomography.reconstruct(tomography.simulate_record(rho, shots=shots, seed=seed)) - exact
                      for seed in range(8)]
            return float(np.sqrt(np.mean(np.abs(np.array(errors)) ** 2)))

        ratio = rms_error(10_000) / rms_error(1_000_000)
        self.assertGreater(ratio, 7.0)
        self.assertLess(ratio, 14.0)

    def test_reconstruction_shows_negative_eigenvalue_for_positive_not_cp(self):
        """gamma=0.2, a=0.05 at t=1: the reconstructed state has lambda_- = -0.0348387."""
        p = GeneratorParams.diagonal(a=0.05, gamma=0.2, omega=1.0)
        self.assertIs(classify(p).verdict, PositivityClass.POSITIVE_NOT_CP)
        rho = evolve_extended(p, singlet(), 1.0)
        exact = state_from_coefficients(tomography.reconstruct(tomography.simulate_record(rho)))
        self.assertAlmostEqual(state_eigenvalues(exact)[-1], -0.0348387, places=6)
        sampled = state_from_coefficients(tomography.reconstruct(tomography.simulate_record(rho, shots=1_000_000,
                                                                                              seed=11)))
        self.assertLess(state_eigenvalues(sampled)[-1], -0.02)

    def test_shot_sampling_is_seeded(self):
        """Same seed, same frequencies."""
        rho = singlet()
        a = tomography.simulate_record(rho, shots=1000, seed=4).expectations
        b = tomography.simulate_record(rho, shots=1000, seed=4).expectations
        self.assertEqual(a, b)

    def test_sampling_rejects_negative_probabilities(self):
        """A matrix with a negative outcome probability cannot be sampled."""
        rho = np.diag([1.5, -0.5, 0.0, 0.0]).astype(complex)
        with self.assertRaises(SamplingError):
            tomography.simulate_record(rho, shots=100)

    def test_missing_setting(self):
        """Reconstruction names the missing setting."""
        rec = tomography.simulate_record(singlet())
        del rec.expectations[(0.0, 0.0, 1, "+z")]
        with self.assertRaises(MissingSettingError) as ctx:
            tomography.reconstruct(rec)
        self.assertEqual(ctx.exception.axis, "+z")
        self.assertEqual(ctx.exception.j, 1)

    def test_invalid_inputs(self):
        """Non-hermitian input and non-positive shot counts raise ValidationError."""
        with self.assertRaises(ValidationError):
            tomography.simulate_record(np.triu(np.ones((4, 4))))
        with self.assertRaises(ValidationError):
            tomography.simulate_record(singlet(), shots=0)


if __name__ == '__main__':
    unittest.main()

import math
import unittest

import numpy as np

# Module to test
from src.services.interferometer import beam
from src.services.bloch_core import PATH_OPERATORS
from src.utils.error_utils import ValidationError


class TestBeam(unittest.TestCase):

    def test_singlet_state(self):
        """Singlet has p = -q = 1/sqrt(2) on |u down> and |d up>."""
        rho = beam.singlet()
        self.assertAlmostEqual(rho[1, 1].real, 0.5)
        self.assertAlmostEqual(rho[2, 2].real, 0.5)
        self.assertAlmostEqual(rho[1, 2].real, -0.5)
        self.assertAlmostEqual(np.trace(rho @ rho).real, 1.0)

    def test_prepare_beam_normalization(self):
        """Amplitudes must satisfy |p|^2 + |q|^2 = 1."""
        beam.prepare_beam(0.6, 0.8j)
        with self.assertRaises(ValidationError):
            beam.prepare_beam(0.6, 0.6)

    def test_unitary(self):
        """U(theta, phi) is unitary."""
        u = beam.beam_splitter_unitary(0.3, 1.1)
        np.testing.assert_allclose(u @ u.conj().T, np.eye(2), atol=1e-15)

    def test_projectors_at_zero_angles(self):
        """At theta = phi = 0 the splitter swaps the counters: P_1(0, 0) = |d><d|."""
        np.testing.assert_allclose(beam.path_projector(1, 0.0, 0.0), PATH_OPERATORS[1], atol=1e-15)
        np.testing.assert_allclose(beam.path_projector(2, 0.0, 0.0), PATH_OPERATORS[0], atol=1e-15)

    def test_projectors_complete(self):
        """P_1 + P_2 = 1 and each is idempotent."""
        p1 = beam.path_projector(1, 0.4, -0.7)
        p2 = beam.path_projector(2, 0.4, -0.7)
        np.testing.assert_allclose(p1 + p2, np.eye(2), atol=1e-15)
        np.testing.assert_allclose(p1 @ p1, p1, atol=1e-15)

    def test_path_observable_closed_form(self):
        """A = [[-cos 2t, e^{i phi} sin 2t], [e^{-i phi} sin 2t, cos 2t]]."""
        theta, phi = 0.35, 0.9
        c, s = math.cos(2 * theta), math.sin(2 * theta)
        expected = np.array([[-c, np.exp(1j * phi) * s], [np.exp(-1j * phi) * s, c]])
        np.testing.assert_allclose(beam.path_observable(theta, phi), expected, atol=1e-15)

    def test_exit_transform_equivalence(self):
        """Counting P_j on the transformed state equals counting P_j(theta, phi) on the input."""
        rho = beam.prepare_beam(0.6, 0.8j)
        theta, phi = 0.2, 1.3
        out = beam.exit_transform(rho, theta, phi)
        for j in (1, 2):
            direct = np.trace(out @ np.kron(PATH_OPERATORS[j - 1], np.eye(2))).real
            rotated = np.trace(rho @ np.kron(beam.path_projector(j, theta, phi), np.eye(2))).real
            self.assertAlmostEqual(direct, rotated, places=14)

    def test_invalid_counter(self):
        """Only counters 1 and 2 exist."""
        with self.assertRaises(ValidationError):
            beam.path_projector(3, 0.0, 0.0)


if __name__ == '__main__':
    unittest.main()

import math
import unittest

import numpy as np

# Module to test
from src.services.generator import matrices
from src.services.noise.models import DiagonalExp, SingleAxisExp, WhiteNoise, damped_cosine_model
from src.utils.error_utils import UnsupportedVariantError, ValidationError


class TestMarkovMatrices(unittest.TestCase):

    def setUp(self):
        self.diag = DiagonalExp(g=0.1, b1=1.0, b3=1.0, lam=1.0, mu=2.0)

    def test_diagonal_markov_limit(self):
        """L_D = 0.01 I and C_A carries the frequency shift for the reference diagonal case."""
        m = matrices.markov_matrices(self.diag, 1.0)
        np.testing.assert_allclose(m.l_d, 0.01 * np.eye(3), atol=1e-15)
        self.assertAlmostEqual(m.c_a[0, 1], 0.005, places=15)
        self.assertAlmostEqual(m.c_a[1, 0], -0.005, places=15)

    def test_single_axis_markov_limit(self):
        """Only the x row of C is populated."""
        m = matrices.markov_matrices(SingleAxisExp(g=0.1, b=1.0, lam=1.0), 1.0)
        self.assertAlmostEqual(m.l_d[0, 0], 0.01)
        self.assertAlmostEqual(m.l_d[0, 1], 0.005)
        self.assertEqual(m.l_d[2, 2], 0.0)

    def test_white_noise_markov_limit(self):
        """For white noise L_D is the strength itself and C_A vanishes."""
        strength = np.diag([0.1, 0.2, 0.3])
        m = matrices.markov_matrices(WhiteNoise(strength), 2.0)
        np.testing.assert_array_equal(m.l_d, strength)
        np.testing.assert_array_equal(m.c_a, np.zeros((3, 3)))

    def test_finite_time_c_limits(self):
        """C(0) = 0 and C(t) approaches the Markov value for t much longer than the correlation time."""
        np.testing.assert_array_equal(matrices.finite_time_c(self.diag, 1.0, 0.0), np.zeros((3, 3)))
        late = matrices.finite_time_c(self.diag, 1.0, 60.0)
        limit = matrices.finite_time_c(self.diag, 1.0, math.inf)
        np.testing.assert_allclose(late, limit, atol=1e-15)

    def test_quadrature_matches_closed_form(self):
        """A general kernel equal to DiagonalExp gives the same Markov matrices."""
        general = damped_cosine_model([0.01, 0.01, 0.01], [1.0, 1.0, 2.0], [0.0, 0.0, 0.0])
        closed = matrices.markov_matrices(self.diag, 1.0)
        numeric = matrices.markov_matrices(general, 1.0)
        np.testing.assert_allclose(numeric.l_d, closed.l_d, atol=1e-11)
        np.testing.assert_allclose(numeric.c_a, closed.c_a, atol=1e-11)

    def test_quadrature_at_finite_time(self):
        """quad_vec agrees with the closed form at finite t too."""
        general = damped_cosine_model([0.01, 0.01, 0.01], [1.0, 1.0, 2.0], [0.0, 0.0, 0.0])
        np.testing.assert_allclose(matrices.finite_time_c(general, 1.0, 2.5),
                                   matrices.finite_time_c(self.diag, 1.0, 2.5), atol=1e-11)

    def test_finite_time_c_rejects_white_noise_and_negative_time(self):
        """White noise has no finite-time C; negative t is invalid."""
        with self.assertRaises(UnsupportedVariantError):
            matrices.finite_time_c(WhiteNoise(np.eye(3)), 1.0, 1.0)
        with self.assertRaises(ValidationError):
            matrices.finite_time_c(self.diag, 1.0, -1.0)

    def test_markov_matrices_validation(self):
        """C_A must be antisymmetric and L_D symmetric."""
        with self.assertRaises(ValidationError):
            matrices.MarkovMatrices(c_a=np.eye(3), l_d=np.eye(3), omega0=1.0)
        with self.assertRaises(ValidationError):
            matrices.MarkovMatrices(c_a=np.zeros((3, 3)), l_d=np.triu(np.ones((3, 3))), omega0=1.0)

    def test_rotation_u(self):
        """U(omega0 t) rotates x into y by a quarter turn."""
        u = matrices.rotation_u(1.0, math.pi / 2)
        np.testing.assert_allclose(u @ [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], atol=1e-15)


if __name__ == '__main__':
    unittest.main()

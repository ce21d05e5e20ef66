import math
import unittest

import numpy as np

# Module to test
from src.services.interferometer import analytic
from src.services.interferometer.correlators import (
    chsh_combination,
    correlator_vector,
    optimal_chsh_config,
)
from src.services.generator.params import GeneratorParams
from src.utils.error_utils import ValidationError


class TestAnalyticCorrelators(unittest.TestCase):

    def setUp(self):
        self.settings = optimal_chsh_config().settings()
        self.times = np.linspace(0.0, 10.0, 41)

    def _check_case(self, case, p, atol=1e-9):
        for t in self.times:
            for s in self.settings:
                self.assertAlmostEqual(analytic.analytic_correlator(case, p, s, t),
                                       correlator_vector(p, s, t), delta=atol)

    def test_undamped(self):
        """Zero dissipation: pure precession of the correlations."""
        self._check_case("none", GeneratorParams(h3=0.7))

    def test_diagonal(self):
        """Diagonal closed form matches the propagator."""
        self._check_case("diagonal", GeneratorParams.diagonal(a=0.05, gamma=0.2, omega=1.0))

    def test_single_axis(self):
        """Single-axis closed form matches in both delta regimes."""
        self._check_case("single-axis", GeneratorParams.single_axis(b=0.3, gamma=0.1, omega=0.2))
        self._check_case("single-axis", GeneratorParams.single_axis(b=0.3, gamma=0.1, omega=1.0))

    def test_white_perturbative_exact_for_diagonal_shape(self):
        """The first-order form has no error when M = diag(a, a, gamma)."""
        self._check_case("white-perturbative", GeneratorParams.diagonal(a=0.008, gamma=0.008, omega=1.0), atol=1e-12)

    def _white_error(self, scale):
        p = GeneratorParams(h3=0.5, a=0.3, b=0.1, c=0.05, alpha=0.2, beta=-0.07, gamma=0.25).scaled_dissipation(scale)
        return max(abs(analytic.analytic_correlator("white-perturbative", p, s, t) - correlator_vector(p, s, t))
                   for t in (2.5, 5.0, 7.5) for s in self.settings)

    def test_white_perturbative_error_is_second_order(self):
        """Halving a generic weak dissipation cuts the correlator error by about four."""
        ratio = self._white_error(0.01) / self._white_error(0.005)
        self.assertGreaterEqual(ratio, 3.0)
        self.assertLessEqual(ratio, 5.0)

    def test_single_axis_chsh_grows(self):
        """delta > gamma: the CHSH value grows monotonically at late times."""
        p = GeneratorParams.single_axis(b=0.3, gamma=0.1, omega=0.2)
        times = np.linspace(10.0, 30.0, 81)
        values = [chsh_combination([analytic.analytic_correlator("single-axis", p, s, t) for s in self.settings])
                  for t in times]
        self.assertTrue(np.all(np.diff(values) > 0))
        self.assertGreater(values[-1], 2.0 * math.sqrt(2.0))

    def test_case_guards(self):
        """Unknown cases and mismatched shapes raise ValidationError."""
        s = self.settings[0]
        with self.assertRaises(ValidationError):
            analytic.analytic_correlator("bogus", GeneratorParams(), s, 1.0)
        with self.assertRaises(ValidationError):
            analytic.analytic_correlator("none", GeneratorParams.diagonal(0.1, 0.1, 1.0), s, 1.0)
        with self.assertRaises(ValidationError):
            analytic.analytic_correlator("diagonal", GeneratorParams.single_axis(0.3, 0.1, 1.0), s, 1.0)


if __name__ == '__main__':
    unittest.main()

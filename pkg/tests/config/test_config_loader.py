import os
import unittest

import numpy as np

# Module to test
from src.config.config_loader import Overrides, RunConfig, load_run_config
from src.services.noise.models import DiagonalExp, GeneralStationary, SingleAxisExp, WhiteNoise
from src.utils.error_utils import ConfigError

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
CONFIGS = os.path.join(ROOT, "configs")

DIAGONAL = """
[noise]
variant = diagonal
g = 0.1
b1 = 1.0
b3 = 1.0
lambda = 1.0
mu = 2.0   # inline comment

[system]
omega0 = 1.0
"""


class TestRunConfig(unittest.TestCase):

    def test_diagonal_noise(self):
        """A diagonal [noise] section yields the reference generator."""
        config = RunConfig("inline.ini").read_string(DIAGONAL)
        self.assertIsInstance(config.noise, DiagonalExp)
        self.assertEqual(config.noise.mu, 2.0)
        p = config.generator_params()
        self.assertAlmostEqual(p.a, 0.02, places=15)
        self.assertAlmostEqual(p.h3, 0.51, places=15)

    def test_defaults(self):
        """An empty file gives zero noise, the singlet and the optimal settings."""
        config = RunConfig("empty.ini").read_string("")
        self.assertEqual(config.noise_variant, "none")
        self.assertIsInstance(config.noise, WhiteNoise)
        self.assertEqual(config.omega0, 1.0)
        self.assertEqual(config.evolve_mode, "entangled")
        np.testing.assert_array_equal(config.initial_spin, [0.0, 0.0, 1.0])
        self.assertIsNone(config.analytic_case)
        self.assertEqual(config.generator_params().h3, 0.5)

    def test_lamb_shift_switch(self):
        """include_lamb_shift = false and the override both drop the shift."""
        off = RunConfig("x.ini").read_string(DIAGONAL.replace("omega0 = 1.0", "omega0 = 1.0\ninclude_lamb_shift = no"))
        self.assertEqual(off.generator_params().h3, 0.5)
        overridden = RunConfig("x.ini").read_string(DIAGONAL, Overrides(no_lamb_shift=True))
        self.assertEqual(overridden.generator_params().h3, 0.5)

    def test_white_noise_scalar_and_matrix(self):
        """strength takes one number or a row-major 3x3 matrix."""
        scalar = RunConfig("w.ini").read_string("[noise]\nvariant = white\nstrength = 0.004\n")
        np.testing.assert_array_equal(scalar.noise.strength, 0.004 * np.eye(3))
        matrix = RunConfig("w.ini").read_string(
            "[noise]\nvariant = white\nstrength = 1, 0, 0, 0, 2, 0, 0, 0, 3\n")
        np.testing.assert_array_equal(np.diag(matrix.noise.strength), [1.0, 2.0, 3.0])

    def test_single_axis_and_general_variants(self):
        """Other variants build their noise models."""
        single = RunConfig("s.ini").read_string("[noise]\nvariant = single-axis\ng = 0.1\nb = 1\nlambda = 1\n")
        self.assertIsInstance(single.noise, SingleAxisExp)
        general = RunConfig("g.ini").read_string(
            "[noise]\nvariant = general\namplitudes = 0.01, 0.01, 0.02\ndecays = 1, 1, 2\n")
        self.assertIsInstance(general.noise, GeneralStationary)

    def test_direct_generator_parameters(self):
        """[generator] values replace the Markov limit; h3 defaults to omega0/2."""
        config = RunConfig("d.ini").read_string("[system]\nomega0 = 2.0\n[generator]\na = 0.05\nalpha = 0.05\ngamma = 0.2\n")
        p = config.generator_params()
        self.assertEqual(p.h3, 1.0)
        self.assertEqual(p.gamma, 0.2)
        self.assertEqual(p.b, 0.0)

    def test_missing_required_value(self):
        """A missing diagonal parameter names section and field."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("m.ini").read_string("[noise]\nvariant = diagonal\ng = 0.1\n")
        self.assertEqual(ctx.exception.section, "noise")
        self.assertEqual(ctx.exception.field, "b1")

    def test_unknown_variant(self):
        """Enumerated keys reject unknown values."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("v.ini").read_string("[noise]\nvariant = pink\n")
        self.assertEqual(ctx.exception.field, "variant")

    def test_bad_number(self):
        """Non-numeric values are reported with their field."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("n.ini").read_string("[system]\nomega0 = fast\n")
        self.assertEqual((ctx.exception.section, ctx.exception.field), ("system", "omega0"))

    def test_invalid_model_parameters(self):
        """Model validation errors surface as ConfigError for the section."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("n.ini").read_string("[noise]\nvariant = single-axis\ng = 0.1\nb = 1\nlambda = -1\n")
        self.assertEqual(ctx.exception.section, "noise")

    def test_syntax_error_line(self):
        """A malformed line reports its line number."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("bad.ini").read_string("[noise]\nvariant = diagonal\nthis line is bad\n")
        self.assertEqual(ctx.exception.line, 3)

    def test_missing_section_header(self):
        """Keys before any section are rejected at line 1."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("bad.ini").read_string("omega0 = 1\n")
        self.assertEqual(ctx.exception.line, 1)

    def test_duplicate_key(self):
        """Duplicate keys report the second occurrence."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("dup.ini").read_string("[system]\nomega0 = 1\nomega0 = 2\n")
        self.assertEqual(ctx.exception.line, 3)

    def test_beam_normalization(self):
        """Beam amplitudes must be normalized; complex values are accepted."""
        config = RunConfig("b.ini").read_string("[beam]\np = 0.6\nq = 0.8j\n")
        self.assertEqual(config.beam_amplitudes, (0.6, 0.8j))
        with self.assertRaises(ConfigError):
            RunConfig("b.ini").read_string("[beam]\np = 0.6\nq = 0.6\n")

    def test_chsh_section(self):
        """Settings and the analytic case are read from [chsh]."""
        config = RunConfig("c.ini").read_string("[chsh]\ntheta2 = 0.5\nanalytic = diagonal\n")
        self.assertEqual(config.chsh.angles2, (0.5, 0.0))
        self.assertEqual(config.analytic_case, "diagonal")
        with self.assertRaises(ConfigError):
            RunConfig("c.ini").read_string("[chsh]\nn1 = 1, 1, 0\n")

    def test_initial_spin_length(self):
        """Bloch vectors longer than one are rejected."""
        with self.assertRaises(ConfigError) as ctx:
            RunConfig("e.ini").read_string("[evolve]\ninitial_spin = 1, 1, 0\n")
        self.assertEqual(ctx.exception.field, "initial_spin")

    def test_shot_mode_needs_shots(self):
        """mode = shots without a positive count is an error."""
        with self.assertRaises(ConfigError):
            RunConfig("t.ini").read_string("[tomography]\nmode = shots\n")

    def test_overrides(self):
        """Command-line values take precedence; --seed sets both seeds."""
        config = RunConfig("o.ini").read_string(
            "[time]\nhorizon = 5\n[oracle]\nseed = 3\n",
            Overrides(seed=9, horizon=2.0, steps=11, format="json", out="-"))
        self.assertEqual(config.horizon, 2.0)
        self.assertEqual(config.steps, 11)
        self.assertEqual(config.oracle_seed, 9)
        self.assertEqual(config.tomography_seed, 9)
        self.assertEqual(config.format, "json")

    def test_validation(self):
        """Non-positive horizons, too few steps and too few trajectories are rejected."""
        for text, field in (("[time]\nhorizon = 0\n", "horizon"),
                            ("[time]\nsteps = 1\n", "steps"),
                            ("[oracle]\ntrajectories = 1\n", "trajectories"),
                            ("[oracle]\nstep = -0.1\n", "step")):
            with self.assertRaises(ConfigError) as ctx:
                RunConfig("v.ini").read_string(text)
            self.assertEqual(ctx.exception.field, field)

    def test_missing_file(self):
        """A missing file raises ConfigError."""
        with self.assertRaises(ConfigError):
            RunConfig(os.path.join(CONFIGS, "does_not_exist.ini")).load()

    def test_shipped_configs_load(self):
        """Every shipped configuration parses and yields generator parameters."""
        for name in sorted(os.listdir(CONFIGS)):
            if name.endswith(".ini"):
                config = load_run_config(os.path.join(CONFIGS, name))
                config.generator_params()
                self.assertGreater(config.horizon, 0.0)


if __name__ == '__main__':
    unittest.main()

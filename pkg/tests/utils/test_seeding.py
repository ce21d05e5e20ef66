import unittest

# Module to test
from src.utils import seeding


class TestSeeding(unittest.TestCase):

    def test_trajectory_seed_is_deterministic(self):
        """Same (master, index) always gives the same seed."""
        self.assertEqual(seeding.trajectory_seed(42, 7), seeding.trajectory_seed(42, 7))

    def test_trajectory_seeds_are_distinct(self):
        """Different indices and masters give different seeds."""
        seeds = {seeding.trajectory_seed(42, i) for i in range(1000)}
        self.assertEqual(len(seeds), 1000)
        self.assertNotEqual(seeding.trajectory_seed(1, 0), seeding.trajectory_seed(2, 0))

    def test_seed_fits_in_64_bits(self):
        """Seeds are valid unsigned 64-bit integers."""
        for i in range(100):
            s = seeding.trajectory_seed(2 ** 64 - 1, i)
            self.assertGreaterEqual(s, 0)
            self.assertLess(s, 2 ** 64)

    def test_trajectory_rng_reproducible(self):
        """Generators built from the same pair produce the same stream."""
        a = seeding.trajectory_rng(5, 3).standard_normal(4)
        b = seeding.trajectory_rng(5, 3).standard_normal(4)
        self.assertEqual(a.tolist(), b.tolist())


if __name__ == '__main__':
    unittest.main()

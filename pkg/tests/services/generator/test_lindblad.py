import unittest

import numpy as np
from hypothesis import given

# Module to test
from src.services.generator import lindblad
from src.services.generator.matrices import MarkovMatrices
from src.services.generator.params import GeneratorParams, bloch_generator, l_d_from_params
from src.utils.error_utils import NoLindbladFormError
from tests.strategies import cp_params, dissipation_params, real_matrices


class TestLindblad(unittest.TestCase):

    @given(dissipation_params())
    def test_dissipator_matrix_is_minus_two_m(self, p):
        """The entry-by-entry dissipator has Bloch block -2M for any symmetric L_D."""
        d = lindblad.dissipator_bloch_matrix(l_d_from_params(p))
        np.testing.assert_allclose(d[1:, 1:], -2.0 * p.dissipation_matrix, atol=1e-13)
        np.testing.assert_allclose(d[0], np.zeros(4), atol=1e-15)
        np.testing.assert_allclose(d[:, 0], np.zeros(4), atol=1e-15)

    @given(cp_params())
    def test_dissipator_is_the_dissipative_part_of_the_generator(self, p):
        """bloch_generator(p) minus its Hamiltonian part equals the Kossakowski dissipator of L_D."""
        hamiltonian_only = GeneratorParams(h1=p.h1, h2=p.h2, h3=p.h3)
        np.testing.assert_allclose(bloch_generator(p) - bloch_generator(hamiltonian_only),
                                   lindblad.dissipator_bloch_matrix(l_d_from_params(p)), atol=1e-13)

    @given(real_matrices(3))
    def test_lindblad_operators_reproduce_dissipator(self, x):
        """Operators from the square root of L_D give the same dissipator."""
        l_d = x @ x.T
        ops = lindblad.lindblad_operators(MarkovMatrices(np.zeros((3, 3)), l_d, 1.0))
        self.assertEqual(len(ops), 3)
        from_ops = lindblad.superoperator_bloch_matrix(lindblad.operator_dissipator(ops))
        np.testing.assert_allclose(from_ops, lindblad.dissipator_bloch_matrix(l_d), atol=1e-12)

    def test_rank_deficient_l_d(self):
        """A PSD L_D with a zero eigenvalue still has a Lindblad form."""
        l_d = np.diag([0.02, 0.0, 0.01])
        ops = lindblad.lindblad_operators(MarkovMatrices(np.zeros((3, 3)), l_d, 1.0))
        np.testing.assert_allclose(ops[1], np.zeros((2, 2)), atol=1e-15)

    def test_no_lindblad_form(self):
        """A negative eigenvalue raises NoLindbladFormError with the eigenvalue attached."""
        p = GeneratorParams.diagonal(a=0.05, gamma=0.2, omega=1.0)
        with self.assertRaises(NoLindbladFormError) as ctx:
            lindblad.lindblad_operators(MarkovMatrices(np.zeros((3, 3)), l_d_from_params(p), 1.0))
        self.assertAlmostEqual(ctx.exception.min_eigenvalue, -0.05)


if __name__ == '__main__':
    unittest.main()

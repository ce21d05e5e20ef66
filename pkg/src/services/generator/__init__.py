"""Markovian generator construction.

Provides functions to:
- Compute the coefficient matrix C(t) and its Markov limit (C_A, L_D).
- Convert (C_A, L_D) into Bloch generator parameters and the 4x4 matrix H + D.
- Build Lindblad operators when L_D is positive semidefinite.
"""

from .matrices import MarkovMatrices, rotation_u, finite_time_c, markov_matrices, truncation_time
from .params import (
    GeneratorParams,
    RelaxationRates,
    params_from_matrices,
    l_d_from_params,
    bloch_generator,
    bloch_redfield_rates,
)
from .lindblad import lindblad_operators, dissipator_bloch_matrix, operator_dissipator, superoperator_bloch_matrix

__all__ = [
    'MarkovMatrices',
    'rotation_u',
    'finite_time_c',
    'markov_matrices',
    'truncation_time',
    'GeneratorParams',
    'RelaxationRates',
    'params_from_matrices',
    'l_d_from_params',
    'bloch_generator',
    'bloch_redfield_rates',
    'lindblad_operators',
    'dissipator_bloch_matrix',
    'operator_dissipator',
    'superoperator_bloch_matrix',
]

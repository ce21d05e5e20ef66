"""Interferometric measurement layer.

Provides:
- Beam preparation and the exit beam splitter.
- Counter expectations, correlators and the CHSH combination.
- Closed-form correlators for the analytically solvable cases.
"""

from .beam import (
    prepare_beam,
    singlet,
    maximally_mixed,
    product_state,
    beam_splitter_unitary,
    path_projector,
    path_observable,
    exit_transform,
)
from .correlators import (
    CorrelatorSetting,
    ChshConfig,
    GFVectors,
    optimal_chsh_config,
    observable_expectation,
    correlator_trace,
    correlator_from_marginal,
    correlator_operator,
    gf_vectors,
    correlator_from_gf,
    correlator_vector,
    chsh_combination,
    chsh_value,
    chsh_value_trace,
)
from .analytic import analytic_correlator, CASES

__all__ = [
    'prepare_beam',
    'singlet',
    'maximally_mixed',
    'product_state',
    'beam_splitter_unitary',
    'path_projector',
    'path_observable',
    'exit_transform',
    'CorrelatorSetting',
    'ChshConfig',
    'GFVectors',
    'optimal_chsh_config',
    'observable_expectation',
    'correlator_trace',
    'correlator_from_marginal',
    'correlator_operator',
    'gf_vectors',
    'correlator_from_gf',
    'correlator_vector',
    'chsh_combination',
    'chsh_value',
    'chsh_value_trace',
    'analytic_correlator',
    'CASES',
]

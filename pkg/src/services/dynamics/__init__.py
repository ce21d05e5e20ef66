"""Semigroup dynamics of the spin and of path (x) spin states."""

from .propagator import (
    Propagator,
    propagator,
    propagator_series,
    evolve_spin,
    dual_propagator,
    evolve_observable,
)
from .analytic import (
    analytic_diag,
    analytic_single_axis,
    singlet_spectrum,
    singlet_entries,
    single_axis_delta_squared,
)
from .extended import (
    apply_extended,
    evolve_extended,
    evolve_extended_series,
    spectrum_series,
    spectrum_minimum,
    scan_grid,
)

__all__ = [
    'Propagator',
    'propagator',
    'propagator_series',
    'evolve_spin',
    'dual_propagator',
    'evolve_observable',
    'analytic_diag',
    'analytic_single_axis',
    'singlet_spectrum',
    'singlet_entries',
    'single_axis_delta_squared',
    'apply_extended',
    'evolve_extended',
    'evolve_extended_series',
    'spectrum_series',
    'spectrum_minimum',
    'scan_grid',
]

"""Configuration settings for cplab."""

import os
from dotenv import load_dotenv

load_dotenv()

# --- Runtime Environment ---
# Upper bound on oracle worker threads (defaults to the CPU count)
CPLAB_THREADS = int(os.getenv('CPLAB_THREADS', str(os.cpu_count() or 1)))
CPLAB_LOG_LEVEL = os.getenv('CPLAB_LOG_LEVEL', 'INFO')
# Config file used when --config is not given on the command line
CPLAB_CONFIG = os.getenv('CPLAB_CONFIG', 'configs/diagonal.ini')

# --- Tolerances ---
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
SYMMETRY_TOL = 1e-12
NORMALIZATION_TOL = 1e-12
PSD_TOL = 1e-10          # eigenvalue >= -PSD_TOL counts as nonnegative
LINDBLAD_TOL = 1e-10     # clamp window for the square root of L_D
SHAPE_TOL = 1e-12        # parameter-shape checks for the analytic cases
# classify() raises only when the positivity margin is this many PSD_TOL below zero
CONSISTENCY_BAND = 10.0

# --- Linear Algebra ---
EXPM_COND_LIMIT = 1e6    # eigenbasis condition number above which expm falls back
DELTA_SERIES_THRESHOLD = 1e-6

# --- Quadrature (general stationary covariances) ---
QUAD_EPSREL = 1e-10
QUAD_EPSABS = 1e-14
QUAD_TAIL_BOUND = 1e-12  # envelope tail beyond the truncation point
QUAD_LIMIT = 2000

# --- Noise Sampling ---
WHITE_NOISE_TAU_STEPS = 5  # surrogate correlation time, in grid steps

# --- Dynamics ---
DEFAULT_SCAN_STEPS = 400

# --- Perturbative Regime ---
# dissipation above omega0 * WEAK_COUPLING_RATIO triggers a warning
WEAK_COUPLING_RATIO = 0.1

# --- Stochastic Oracle ---
RK4_STEPS_PER_PERIOD = 200
RK4_STABILITY_LIMIT = 0.1
ORACLE_CHUNK_SIZE = 256
ORACLE_BUDGET_FLOOR = 5e-3
ORACLE_SIGMA_FACTOR = 3.0
ORACLE_TRAJECTORIES = int(os.getenv('CPLAB_ORACLE_TRAJECTORIES', '20000'))

# --- Output ---
CSV_PRECISION = 17

# --- Reference Values ---
CLASSICAL_BOUND = 2.0
TSIRELSON_BOUND = 2.0 * 2.0 ** 0.5

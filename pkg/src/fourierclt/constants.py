from __future__ import annotations

import math

import numpy as np


APP_NAME = "fourierclt"

# Schema version for report JSON and sweep config files.
CURRENT_SCHEMA_VERSION = 1

OUTPUT_DIR_ENV = "FOURIERCLT_OUTPUT_DIR"
DEFAULT_CSV_NAME = "report.csv"
DEFAULT_JSON_NAME = "report.json"

# Standard evaluation grid: log-spaced, mirrored to negative xi on demand.
DEFAULT_XI_MIN = 1e-3
DEFAULT_XI_MAX = 1e2
DEFAULT_GRID_POINTS = 400
DEFAULT_REFINE_TOL = 1e-6

# Hard ceiling for tail extension of the sup-search.
XI_HARD_MAX = 1e6

# Per-evaluator rounding floor, in units of machine epsilon.
ROUNDOFF_FLOOR = 16.0 * float(np.finfo(np.float64).eps)

# Uniform statistical envelope of an empirical cf is this constant over sqrt(n).
EMPIRICAL_ERROR_CONSTANT = 3.0

# Maximum number of grid local maxima refined per search.
MAX_REFINED_CANDIDATES = 8

GERBER_CONSTANT = 5.4
# sup|F_a - Phi| <= KOLMOGOROV_D2_CONSTANT * d2 ** (1/3)
KOLMOGOROV_D2_CONSTANT = 3.0 * 12.0 ** (2.0 / 3.0) / math.pi

DKW_ALPHA = 0.01

# Draws per independent RNG block; fixed so output does not depend on --jobs.
SAMPLE_CHUNK = 65536

DEFAULT_S = 3.0
DEFAULT_A_VALUES = (0.9, 0.99, 0.999)
DEFAULT_N_SAMPLES = 100_000
DEFAULT_TRUNC_TOL = 1e-8
DEFAULT_SEED = 0
DEFAULT_JOBS = 1

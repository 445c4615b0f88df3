"""
Global configuration for the fractional uncertainty toolkit.

Every module reads these values at call time (``import config``), so tests
and the CLI can override them without reloading anything.
"""

# Default guard for the form order s (evaluation outside it attaches a warning)
S_GUARD_MIN = 0.01
S_GUARD_MAX = 0.49

# Distance from 0 and 1/2 inside which the antiderivative paths refuse s
S_ENDPOINT_MARGIN = 1e-6

# Binary digits kept when snapping real inputs to the dyadic grid
DYADIC_RESOLUTION = 52

# Largest dense grid (in cells) synthesize / analyze will allocate
MAX_GRID_CELLS = 1 << 22

# Haar coefficients below this fraction of ||f||_2 are dropped by analyze as rounding noise
ANALYSIS_ZERO_TOLERANCE = 1e-13

# Relative slack tolerance for the uncertainty inequalities
SLACK_TOLERANCE = 1e-12

# Allowed deviation of ||f||_2 from 1 for the Euclidean theorem
NORMALIZATION_TOLERANCE = 1e-10

# Agreement tolerance between exact paths (closed form vs direct vs spectral)
EXACT_TOLERANCE = 1e-10

# Agreement tolerance between the spectral formulas and direct double sums
SPECTRAL_TOLERANCE = 1e-8

# Agreement tolerance between exact paths and the deterministic oracles
ORACLE_TOLERANCE = 1e-6

# Target tail bound for the level-set series oracle when no term count is given
SERIES_TAIL_TOLERANCE = 1e-13

# Hard cap on series oracle terms
SERIES_MAX_TERMS = 5000

# Samples used by the stratified Monte Carlo oracle in verification runs
STRATIFIED_SAMPLES = 200_000

# Maximum number of quadrature panels per half cell in the adaptive oracle
ADAPTIVE_PANEL_BUDGET = 20_000

# Worker threads for sweeps and lemma checks
MAX_WORKERS = 4

# Maximum allowed runtime for each lemma check in seconds
MAX_CHECK_RUNTIME = 120

# Default seed for every random generator
DEFAULT_SEED = 42

# Default Haar level range [j_min, j_max] for random wave functions
DEFAULT_LEVEL_RANGE = (-4, 6)

# Default cap on nonzero coefficients of a random wave function
DEFAULT_MAX_COEFFICIENTS = 64

# Significant digits of every number written to CSV or JSON reports
OUTPUT_SIGNIFICANT_DIGITS = 17

# Multiplier applied to gamma2; only fault-injection tests change it
GAMMA2_FAULT_FACTOR = 1.0

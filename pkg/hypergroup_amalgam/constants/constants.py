# Numeric defaults shared across services and the CLI

# Distinguished value for an infinite amalgam exponent
INF = "inf"

# Hypergroup parameter range
ALPHA_MIN = 0.5
DEFAULT_ALPHAS = [0.5, 0.75, 1.0, 1.5, 2.5]

# Special functions
GAMMA_MAX_ARG = 170.0
SERIES_REL_TRUNCATION = 1e-17
SERIES_MAX_TERMS = 500
J_NORM_SERIES_CROSSOVER = 8.0

# Quadrature
DEFAULT_ABS_TOL = 1e-10
DEFAULT_REL_TOL = 1e-10
DEFAULT_MAX_SUBDIVISIONS = 4096
JACOBI_START_NODES = 8
JACOBI_MAX_NODES = 512
GRADING_RATIO = 0.125

# Amalgam norms
SUP_SAMPLES_PER_UNIT = 256
LP_INF_SAMPLES = 10_000
DEFAULT_Y_STEP = 0.25
DEFAULT_TAIL_N_MAX = 400
DEFAULT_TAIL_FIT_WINDOW = 50
THRESHOLD_TAIL_N_MAX = 400
THRESHOLD_TAIL_FIT_WINDOW = 300

# Fourier transform
DEFAULT_LAMBDA_CUT = 400.0
LAMBDA_SERIES_LIMIT = 1e-6
ENVELOPE_SLACK = 1.05

# Verification harness
DEFAULT_SEED = 0x5EED
FINITE_P_VALUES = [1.0, 2.0, 3.5]
CACHE_QUANTUM = 1e-12
VALUE_CACHE_SIZE = 65536

# CLI exit codes
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_FLAGS = 2
EXIT_NON_CONVERGENCE = 3
EXIT_TAIL_DIVERGENCE = 4
EXIT_BAD_HYPERGROUP = 5

# Report schema version - increment this when a JSON report layout changes
REPORT_SCHEMA_VERSION = "1.0.0"

DEFAULT_SEED = 0
DEFAULT_JOBS = 1

STATIONARITY_TOL = 1e-8
VALUE_TOL = 1e-9
WEIGHT_SUM_TOL = 1e-12
MONOTONE_SLACK = 1e-12
DENSE_GAP = 1e-7
ACHIEVER_TOL = 1e-7
SUPPORT_EPS = 1e-7

STARTS_PER_VERTEX = 50
SEARCH_STARTS_PER_VERTEX = 4
LEDGER_STARTS_PER_VERTEX = 2
# ascent starts per vertex once support enumeration has a stationary candidate
CONFIRM_STARTS_PER_VERTEX = 1
SUPPORT_ENUM_THRESHOLD = 10
MAX_ASCENT_ITERS = 20_000
ASCENT_CHECK_EVERY = 25
ASCENT_STAGE_ITERS = 200
POLISH_ITERS = 30
SYMMETRIZE_MAX_SWEEPS = 10_000

RATIONAL_DENOMINATOR_CAP = 10_000

MAX_UNFORCED_EDGE_SLOTS = 20
MAX_EDGE_SLOTS = 35
MAX_CANONICAL_VERTICES = 12

QUICK_GRID_STEP = 1e-4
FULL_GRID_STEP = 1e-5
QUICK_SEARCH_MAX_N = 5
FULL_SEARCH_MAX_N = 6
RANDOM_APEX_GRAPHS = 500
RANDOM_APEX_MAX_N = 8
MOTZKIN_STRAUS_GRAPHS = 200
MOTZKIN_STRAUS_MAX_N = 12

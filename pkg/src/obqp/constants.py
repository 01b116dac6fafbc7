"""Constants for obqp."""

# Exit codes
EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 1
EXIT_EXPECTATION_FAILED = 2
EXIT_IO_ERROR = 3
EXIT_INTERNAL_ERROR = 4

# Configuration defaults
DEFAULT_CONFIG_FILENAME = "obqp.yml"
ALTERNATE_CONFIG_FILENAMES = ["obqp.yaml", ".obqp.yml", ".obqp.yaml"]
SEED_ENV_VAR = "OBQP_SEED"

# Logging
DEFAULT_LOG_FORMAT_VERBOSE = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_LOG_FORMAT_SIMPLE = "%(message)s"

# Output
JSON_SCHEMA_VERSION = 1
REPORTER_FORMATS = ["json", "console"]
DOCUMENT_SUFFIX = ".obqp"

# Homology quotients for the Stein test
QUOTIENT_H1F = "h1f"
QUOTIENT_H1F_MINUS_P = "h1fminusp"

# Point-push expansion convention: which parallel copy carries the push sign,
# and the sign of the puncture class in the right-hand copy.
PUSH_POSITIVE_COPY = "left"
PUSH_PUNCTURE_SIGN = 1

# Bounded search
DEFAULT_NORMALIZE_BUDGET = 4
DEFAULT_NORMALIZE_MAX_STATES = 20000
DEFAULT_MAX_FOLD_WIDTH = 2

# Hopf stabilization variants
HANDLE_SAME_BOUNDARY = "same_boundary"
HANDLE_TWO_BOUNDARIES = "two_boundaries"

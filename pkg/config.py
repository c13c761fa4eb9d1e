"""
Configuration file for PolarBox
"""
import os

# App configuration
APP_NAME = "polarbox"
APP_DESCRIPTION = "Exact H/V conversion, polars and HV-symmetry for pointed rational polyhedra"

# Brute-force oracles refuse more than this many row subsets
DEFAULT_CAP = int(os.getenv("POLARBOX_CAP", "5000"))

# Randomized suites
DEFAULT_SEED = int(os.getenv("POLARBOX_SEED", "20240607"))

LOG_LEVEL = os.getenv("POLARBOX_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# Stable process exit codes
EXIT_CODES = {
    'ok': 0,
    'not_symmetric': 1,
    'internal': 1,
    'parse': 2,
    'infeasible': 3,
    'not_pointed': 4,
    'origin_not_contained': 5,
    'cap_exceeded': 6,
}

# Random instance parameters for property suites
RANDOM_INSTANCE = {
    'coord_min': -3,
    'coord_max': 3,
    'dim_min': 2,
    'dim_max': 4,
    'rows_min': 3,
    'rows_max': 8,
    'ray_probability': 0.25,
    'max_attempts': 1000,
}

# liftcompare CSV schema
LIFTCOMPARE_COLUMNS = ['route', 'output_rows', 'feasible_bases', 'max_intermediate_rays']

# File naming
REP_FILE_SUFFIXES = {
    'H': '.ine',
    'V': '.ext',
}
REP_FILE_ENCODING = "utf-8"

# Instances drawn by the suite command
SUITE_DEFAULT_COUNT = int(os.getenv("POLARBOX_SUITE_COUNT", "200"))

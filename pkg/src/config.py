"""
Configuration - Rees Hochschild

Loads environment variables and engine configuration.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

VERSION = '0.1.0'

# Degrees
MAX_DEGREE = int(os.getenv('HH_MAX_DEGREE', '3'))  # complexes are built to this degree
DEGREE_CAP = int(os.getenv('HH_DEGREE_CAP', '4'))  # larger degrees need --force
HOMOTOPY_DEGREE = 4
HOMOTOPY_CHAIN_CAP = int(os.getenv('HH_HOMOTOPY_CHAIN_CAP', '200000'))  # basis chains per homotopy degree

# Size guards
CHAIN_DIM_CAP = int(os.getenv('HH_CHAIN_DIM_CAP', '2000000'))
INSTANCE_SIZE_CAP = int(os.getenv('HH_INSTANCE_SIZE_CAP', '4096'))  # |I|*|G|*|Lambda|

# Construction self-checks
ASSOCIATIVITY_CHECK_THRESHOLD = 64  # algebras above this dim may skip the check
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 2000  # |S| up to this is checked on all triples
ASSOCIATIVITY_SAMPLES = 200_000

# Exact linear algebra
DENSE_THRESHOLD = 64  # below 64x64 plain Fraction elimination is used
MODULAR_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563)

# Oracles
ORACLE_MAX_DIM = 9  # dense cross-checks only for dim A(S) <= 9
ORACLE_MAX_DEGREE = 2

# Pooler configuration
WORKERS = int(os.getenv('HH_WORKERS', '1'))
SEED = int(os.getenv('HH_SEED', '0'))

# Logging
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
LOG_DIR = os.getenv('LOG_DIR', 'logs')

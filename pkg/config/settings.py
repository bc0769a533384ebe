"""
Configuration settings for the RSBF matrix toolkit
"""

import os

# Width of a BitVector encoding; Burnside counting works up to here
MAX_BURNSIDE_N = 32

# Budgets (largest n each computation accepts unless overridden)
MAX_ENUMERATION_N = int(os.getenv('RSBF_MAX_ENUMERATION_N', '24'))
MAX_MATRIX_N = int(os.getenv('RSBF_MAX_MATRIX_N', '16'))
MAX_SQUARE_CHECK_N = int(os.getenv('RSBF_MAX_SQUARE_CHECK_N', '14'))
MAX_CLOSED_FORM_N = int(os.getenv('RSBF_MAX_CLOSED_FORM_N', '24'))
MAX_ORACLE_N = int(os.getenv('RSBF_MAX_ORACLE_N', '16'))
MAX_ORACLE_ORBIT_N = int(os.getenv('RSBF_MAX_ORACLE_ORBIT_N', '20'))
MAX_WALSH_BRUTE_N = int(os.getenv('RSBF_MAX_WALSH_BRUTE_N', '24'))
MAX_SPECTRUM_BRUTE_N = int(os.getenv('RSBF_MAX_SPECTRUM_BRUTE_N', '14'))
MAX_SAMPLE_N = int(os.getenv('RSBF_MAX_SAMPLE_N', '12'))

# Exhaustive bent search walks 2**g_n functions
MAX_SEARCH_ORBITS = int(os.getenv('RSBF_MAX_SEARCH_ORBITS', '26'))
SEARCH_CHUNK_SIZE = int(os.getenv('RSBF_SEARCH_CHUNK_SIZE', '65536'))

# Sampling and parallelism
DEFAULT_SEED = int(os.getenv('RSBF_DEFAULT_SEED', '0'))
DEFAULT_THREADS = int(os.getenv('RSBF_THREADS', '1'))
DEFAULT_PROBE_TRIALS = int(os.getenv('RSBF_PROBE_TRIALS', '8'))

# Logging
LOG_LEVEL = os.getenv('LOG_LEVEL', 'ERROR')

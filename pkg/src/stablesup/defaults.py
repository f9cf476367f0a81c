"""Package-wide numerical defaults.

Every tolerance, grid and sample size used by the library and the command
line lives here so that a published table can be reproduced from a single
command line. Command-line flags override these values; nothing else does.
"""

import os

# series
SERIES_TOL = 1e-12
SERIES_MAX_TERMS = 20000
#: decimal digits carried by IEEE doubles
WORKING_DIGITS = 15
#: an evaluation losing more than WORKING_DIGITS - 6 digits is refused
SERIES_GATE_DIGITS = WORKING_DIGITS - 6
#: digits the series may lose and still be trusted to 1e-6 against the
#: integral representation; calibrated by scripts/calibrate_xtrust.py
TRUST_DIGITS = 5.0

# integral representation
ABS_TOL = 1e-14
REL_TOL = 1e-10
JACOBI_NODES = 32
LEGENDRE_NODES = 24
MAX_HALF_PERIODS = 2000
ACCEL_DEPTH = 20
#: the head integral runs over whole half-periods covering at least [0, HEAD_LENGTH]
HEAD_LENGTH = 20.0
#: widest panel used inside one half-period
PANEL_WIDTH = 0.5
#: exponent of the t = h v**q substitution on the panel touching t = 0
ORIGIN_POWER = 6
#: e**-INNER_DECAY is the cutoff of the exponential factor in g1, g2
INNER_DECAY = 40.0

# distribution integrals (normalisation, Laplace transform, cdf)
TAIL_START = 50.0
PANELS_PER_DECADE = 6

# Monte Carlo
MC_PATHS = 100_000
MC_STEPS = 10_000
MC_FAST_PATHS = 10_000
MC_FAST_STEPS = 1_000
MC_CHUNK = 500
MC_SEED = 20080101


def max_threads():
    """Thread cap from ``STABLESUP_THREADS`` (default: CPU count)."""
    raw = os.environ.get("STABLESUP_THREADS")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1

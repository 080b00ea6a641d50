"""
Library constant parameters module

"""

# Dense eigensolver: relative off-diagonal tolerance and sweep limit
EIG_TOL = 1e-12
EIG_MAX_SWEEPS = 64
# Jacobi block size: a sweep pairs blocks of this many indices
EIG_BLOCK = 16
# Rounding error allowance of a dense solve, in ulps per unit of order
EIG_ROUNDOFF = 16
# Eigensolver backends
EIG_JACOBI = "jacobi"
EIG_LAPACK = "lapack"
EIG_METHODS = (EIG_JACOBI, EIG_LAPACK)

# Relative pivot threshold for the numerical rank
RANK_TOL = 1e-8

# Normalized Laplacian spectrum validation slack
SPECTRUM_EPS = 1e-9
# Sum-of-eigenvalues slack, scaled by the order
SPECTRUM_SUM_EPS = 1e-8
# Two sorted eigenvalues closer than this belong to the same cluster
MULTIPLICITY_GAP = 1e-6
# Eigenvalues within this distance of 0 count as zero eigenvalues
ZERO_EIG_TOL = 1e-8

# Equality tolerance for the bound suite
BOUND_TOL = 1e-9

# Largest fractal order (number of vertices) that will be built
FRACTAL_SIZE_CAP = 2 * 10 ** 6
# Largest order the command line accepts for dense solves
DENSE_CAP = 2000

# Text formats
SPECTRUM_FMT = "{:.15g}"
VALUE_FMT = "{:.12g}"

# Scaling CSV schema
SCALING_HEADER = ("m", "n", "N", "NEE",
                  "thm2_lower", "thm2_upper", "thm3_lower")

# Command line exit codes
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2
EXIT_VERIFY = 3

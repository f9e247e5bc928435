"""Configuration for gammamorphic."""

import os
try:
    from dotenv import load_dotenv
    load_dotenv()
except (ImportError, PermissionError, FileNotFoundError):
    # If .env file doesn't exist or can't be loaded, continue with environment variables
    pass

# Maximum number of dyadic refinement levels in the double-exponential quadrature.
# Level k uses step 2^-k, so depth 12 is roughly 2^12 nodes per unit of the window.
MAX_QUAD_DEPTH = int(os.getenv("GAMMAMORPHIC_MAX_QUAD_DEPTH", "12"))

# Default tolerance: two successive quadrature levels must agree within this
QUAD_TOL = float(os.getenv("GAMMAMORPHIC_QUAD_TOL", "1e-12"))

# Auto dispatch switches ln G to the Stirling-type expansion at Re x >= this
ASYMPTOTIC_THRESHOLD = float(os.getenv("GAMMAMORPHIC_ASYMPTOTIC_THRESHOLD", "8.0"))

# Number of explicit factors in the Weierstrass product route (a zeta tail covers the rest)
WEIERSTRASS_TERMS = int(os.getenv("GAMMAMORPHIC_WEIERSTRASS_TERMS", "10000"))

# Rows n = 0..LATTICE_N_MAX summed explicitly in the quarter-lattice product
LATTICE_N_MAX = int(os.getenv("GAMMAMORPHIC_LATTICE_N_MAX", "200"))

# Exact oracles refuse larger arguments (values grow super-exponentially)
ORACLE_MAX_ARGUMENT = 50

# Verification suite defaults
SUITE_DENSITY = os.getenv("GAMMAMORPHIC_SUITE_DENSITY", "standard")
SUITE_WORKERS = int(os.getenv("GAMMAMORPHIC_SUITE_WORKERS", "1"))

# Logging level for the CLI and the service (library modules only create loggers)
LOG_LEVEL = os.getenv("GAMMAMORPHIC_LOG_LEVEL", "WARNING").upper()

# Port for the HTTP service
API_PORT = int(os.getenv("GAMMAMORPHIC_API_PORT", "8001"))

DENSITIES = ("small", "standard", "dense")

# Validation: refuse settings the numerical routes cannot honour
if not 1 <= MAX_QUAD_DEPTH <= 20:
    raise ValueError(
        f"GAMMAMORPHIC_MAX_QUAD_DEPTH={MAX_QUAD_DEPTH} is out of range. "
        "Use a depth between 1 and 20 (default 12)."
    )

if QUAD_TOL <= 0:
    raise ValueError(f"GAMMAMORPHIC_QUAD_TOL must be positive, got {QUAD_TOL}")

if ASYMPTOTIC_THRESHOLD < 4:
    raise ValueError(
        f"GAMMAMORPHIC_ASYMPTOTIC_THRESHOLD={ASYMPTOTIC_THRESHOLD} is too small: "
        "the Stirling-type expansion of ln G loses binary64 accuracy below 4."
    )

if SUITE_DENSITY not in DENSITIES:
    raise ValueError(
        f"GAMMAMORPHIC_SUITE_DENSITY must be one of {DENSITIES}, got '{SUITE_DENSITY}'"
    )

if SUITE_WORKERS < 1:
    raise ValueError(f"GAMMAMORPHIC_SUITE_WORKERS must be >= 1, got {SUITE_WORKERS}")

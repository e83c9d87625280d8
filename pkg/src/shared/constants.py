"""Toolkit constants."""

# === Subsampling ledger ===
LAMBDA_SCALE = 0.001              # lambda := 0.001 * min(delta, nu)
D0_NUMERATOR = 10_000             # d_0 = 10000 / lambda^3
UNION_BOUND_BASE = 100            # R_0 second term base
PREMISE_LAMBDA_SQ_NE = 100        # 1 / (lambda^2 n_E) <= 0.01

# === Pipelines ===
DELTA_FACTOR = 0.01               # delta = 0.01 * epsilon
COMPLETENESS_FACTOR = 0.02        # val >= 1 - 0.02 * epsilon

# === Degree balancing ===
BALANCE_TOLERANCE_FACTOR = 0.01   # |q1/q2 - sqrt 2| <= 0.01 * epsilon
BALANCE_MAX_DENOMINATOR = 10**6

# === Numerics ===
FLOAT_TOLERANCE = 1e-9
GAMMA_QUAD_TOLERANCE = 1e-10

# === Sweeps ===
SWEEP_CSV_COLUMNS = [
    "cell",
    "seed",
    "derived_seed",
    "kind",
    "params",
    "ok",
    "error",
    "event_e1",
    "event_e2",
    "event_e3",
    "completeness_ok",
    "value",
    "ratio",
]

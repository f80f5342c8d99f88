"""
Spectral GoF Configuration
All configurable defaults in one place
"""

# ==================== KERNELS ====================
KERNEL = {
    "default": "gaussian",        # Options: "gaussian", "periodic_spline", "finite_rank_test"
    "gaussian_bandwidth": 1.0,    # h in exp(-|x-y|^2 / (2h))
    "spline_order": 1,            # Only r=1 (Bernoulli B2) is supported
    "symmetry_tol": 1e-12,        # Gram symmetry check when A is B
}

# ==================== PARAMETER GRIDS ====================
GRID = {
    "lambda_lower": 1e-6,         # lambda_L
    "lambda_upper": 5.0,          # lambda_U
    "bandwidth_lower": 0.01,      # w_L (multiplies the median heuristic)
    "bandwidth_upper": 100.0,     # w_U
    "relative_tol": 1e-9,         # Slack when comparing the last grid point to the upper end
}

# ==================== REGULARIZERS ====================
REGULARIZER = {
    "default": "tikhonov",        # Options: "tikhonov", "showalter"
    "series_cutoff": 1e-6,        # Showalter uses a Taylor series for x/lambda below this
    "limit_floor": 1e-10,         # g_diff_ratio switches to the analytic limit below floor * kappa
    "scan_points": 2001,          # Grid size for the regularizer constant scan
    "scan_lambdas": (1e-6, 1e-4, 1e-2, 1e-1, 1.0, 5.0),
    "scan_tol": 1e-9,
}

# ==================== SPECTRAL ====================
SPECTRAL = {
    "clamp_tol": 1e-10,           # Negative eigenvalues above -clamp_tol * kappa are set to 0
    "symmetry_tol": 1e-8,         # Relative asymmetry tolerated in K_s
}

# ==================== TESTS ====================
TEST = {
    "alpha": 0.05,
    "c1": 65.0,                   # Smallest constant allowed for the concentration threshold
    "permutations": 60,           # B
    "covariance_samples": 100,    # s
    "m_ratio": 3,                 # m = m_ratio * n
    "batch_size": 256,            # Permutations evaluated per matrix product
    "tie_tol": 1e-12,             # Relative slack under which permuted values count as ties
}

# ==================== ORACLE ====================
ORACLE = {
    "k_max": 1024,                # Mercer truncation for the oracle statistic
    "population_truncation": 100000,  # Truncation for population N1 / N2
    "threshold": "chebyshev",     # Options: "chebyshev", "simulated"
    "null_draws": 60,             # B for the simulated threshold
}

# ==================== DISTRIBUTIONS ====================
DISTRIBUTION = {
    "perturbation_amplitude": 2.7,    # theta = amplitude * P^(-d/2)
    "min_density": 1e-3,              # Amplitude is clipped so the density stays above this
    "rejection_batch": 4096,          # Proposals drawn per rejection round
    "max_rejection_rounds": 10000,
}

# ==================== HARNESS ====================
HARNESS = {
    "repetitions": 200,           # R
    "seed": 20240101,             # Master seed
    "workers": 1,                 # Process pool size (1 = serial)
}

# ==================== PLOTTING ====================
PLOT = {
    "figure_width": 6.0,
    "figure_height": 4.0,
    "marker": "o",
    "capsize": 3,
    "format": "svg",
    "colors": [
        "#1f77b4",
        "#d62728",
        "#2ca02c",
        "#ff7f0e",
        "#9467bd",
        "#8c564b",
    ],
}

# ==================== LOGGING ====================
LOGGING = {
    "level": "WARNING",
    "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
}

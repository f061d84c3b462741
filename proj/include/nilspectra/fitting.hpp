#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace nilspectra {

struct FitResult {
    double slope = 0.0;
    double stderr_slope = 0.0;
    double intercept = 0.0;
    std::size_t points = 0;
};

/// Unweighted least-squares slope of log N against log lambda.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& lambda_count_pairs);

/// Eigenvalue list converted to counting pairs by rank: (lambda_s, s+1),
/// restricted to the inclusive 1-based window [lo, hi].
FitResult fit_exponent_eigenvalues(const std::vector<double>& eigenvalues, std::size_t lo,
                                   std::size_t hi);

/// Default fit window: drop the first 10% of entries and everything past
/// the converged window (pass -1 for no converged bound).
std::pair<std::size_t, std::size_t> default_fit_window(std::size_t count, int converged_window);

}  // namespace nilspectra

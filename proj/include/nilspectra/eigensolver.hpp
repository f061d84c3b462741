#pragma once

#include <vector>

#include "nilspectra/discretize.hpp"

namespace nilspectra {

struct SpectrumResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<double> residuals;    // ||A v - lambda v|| / ||v||, 0 for direct solves
    std::vector<bool> converged;
    GridSpec grid;
    std::string problem;
    double rho = 0.0;
    std::string method;
};

/// k smallest eigenvalues. Dispatches to the dense direct oracle when
/// dim <= 4000 and to shift-invert Lanczos otherwise.
SpectrumResult lowest_eigenvalues(const SparseOperator& op, int k, double tol = 1e-8);

/// Dense direct solve (oracle path); exploits tridiagonal structure.
SpectrumResult solve_dense(const SparseOperator& op, int k);

/// Shift-invert Lanczos at sigma = 0 with full reorthogonalization,
/// locking, and true-residual convergence checks. Inner solves use a
/// sparse LDLT factorization for moderate dimensions and Jacobi-
/// preconditioned CG above; non-converged entries are flagged, never
/// silently returned.
SpectrumResult solve_lanczos(const SparseOperator& op, int k, double tol = 1e-8,
                             int max_cycles = 40);

/// Row-parallel y = A x honoring NILSPECTRA_THREADS; bit-identical for any
/// thread count (each row is summed by exactly one worker).
void parallel_spmv(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& x,
                   Eigen::VectorXd& y, int threads);

}  // namespace nilspectra

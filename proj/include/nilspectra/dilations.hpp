#pragma once

#include <cstdint>
#include <vector>

#include "nilspectra/lie_algebra.hpp"

namespace nilspectra {

/// Diagonal dilation family on a graded algebra: one positive integer
/// weight per basis vector, gcd-normalized. Compatibility means
/// theta_i + theta_j = theta_k for every nonzero c_{ij}^k, i.e. D_r is an
/// algebra automorphism.
struct DilationFamily {
    AlgebraPtr algebra;
    std::vector<std::int64_t> weights;      // normalized, per basis position
    std::vector<std::int64_t> raw_weights;  // as supplied, for display
    std::int64_t Q = 0;                     // homogeneous dimension = sum of weights
    std::int64_t Q_center = 0;              // sum over central basis vectors

    std::int64_t weight_of(const std::string& label) const;
};

/// Dual-basis coordinates l_1..l_d of a functional on the algebra.
struct DualVector {
    AlgebraPtr algebra;
    Eigen::VectorXd coeffs;

    DualVector(AlgebraPtr alg, Eigen::VectorXd c);
    static DualVector dual_basis(AlgebraPtr alg, int index);
};

/// Weights theta_j = stratum(j).
DilationFamily canonical_dilations(const AlgebraPtr& algebra);

/// Validates an arbitrary per-basis weight vector against every structure
/// constant; returns the gcd-normalized family or throws with the
/// violating triple.
DilationFamily validate_weights(const AlgebraPtr& algebra, std::vector<std::int64_t> weights);

/// Expands a Dynin-Folland generator tuple (theta_1..theta_{2n+1}) to the
/// full per-basis weight vector; requires theta_1+theta_{n+1} = ... =
/// theta_n+theta_{2n}.
std::vector<std::int64_t> df_weight_vector(int n, const std::vector<std::int64_t>& theta);

/// Expands a Heisenberg generator tuple (theta_1..theta_{2n}); the center
/// weight is the (constant) sum theta_j + theta_{n+j}.
std::vector<std::int64_t> heisenberg_weight_vector(int n, const std::vector<std::int64_t>& theta);

/// All gcd-normalized admissible Dynin-Folland generator tuples with
/// entries <= max_weight.
std::vector<DilationFamily> enumerate_df_weights(int n, std::int64_t max_weight);

/// Homogeneous quasi-norm |l| = max_j |l_j|^{1/theta_j}.
double quasinorm(const DualVector& l, const DilationFamily& D);

/// Dual dilations: coordinate j scales by r^{theta_j}.
DualVector dilate_dual(const DualVector& l, double r, const DilationFamily& D);

}  // namespace nilspectra

#include "nilspectra/dilations.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nilspectra {

std::int64_t DilationFamily::weight_of(const std::string& label) const {
    const int i = algebra->index_of(label);
    if (i < 0) throw std::invalid_argument("weight_of: unknown label " + label);
    return weights.at(i);
}

DualVector::DualVector(AlgebraPtr alg, Eigen::VectorXd c)
    : algebra(std::move(alg)), coeffs(std::move(c)) {
    if (coeffs.size() != algebra->dim())
        throw std::invalid_argument("dual vector: coordinate length != algebra dimension");
}

DualVector DualVector::dual_basis(AlgebraPtr alg, int index) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(alg->dim());
    c(index) = 1.0;
    return DualVector(std::move(alg), std::move(c));
}

namespace {

DilationFamily finalize(AlgebraPtr algebra, std::vector<std::int64_t> weights) {
    DilationFamily fam;
    fam.algebra = std::move(algebra);
    fam.raw_weights = weights;
    std::int64_t g = 0;
    for (std::int64_t w : weights) g = std::gcd(g, w);
    if (g > 1)
        for (auto& w : weights) w /= g;
    fam.weights = std::move(weights);
    fam.Q = std::accumulate(fam.weights.begin(), fam.weights.end(), std::int64_t{0});
    for (int c : fam.algebra->center_indices()) fam.Q_center += fam.weights[c];
    return fam;
}

}  // namespace

DilationFamily canonical_dilations(const AlgebraPtr& algebra) {
    std::vector<std::int64_t> w(algebra->dim());
    for (int i = 0; i < algebra->dim(); ++i) w[i] = algebra->stratum(i);
    return finalize(algebra, std::move(w));
}

DilationFamily validate_weights(const AlgebraPtr& algebra, std::vector<std::int64_t> weights) {
    if (static_cast<int>(weights.size()) != algebra->dim())
        throw std::invalid_argument("validate_weights: weight count != algebra dimension");
    for (std::int64_t w : weights)
        if (w < 1) throw std::invalid_argument("validate_weights: weights must be >= 1");
    for (const auto& [ij, row] : algebra->stored_brackets()) {
        auto [i, j] = ij;
        for (const auto& [k, c] : row)
            if (weights[i] + weights[j] != weights[k])
                throw std::invalid_argument(
                    "not an automorphism: theta(" + algebra->label(i) + ") + theta(" +
                    algebra->label(j) + ") != theta(" + algebra->label(k) + ")");
    }
    return finalize(algebra, std::move(weights));
}

std::vector<std::int64_t> df_weight_vector(int n, const std::vector<std::int64_t>& theta) {
    if (static_cast<int>(theta.size()) != 2 * n + 1)
        throw std::invalid_argument("df_weight_vector: expected 2n+1 generator weights");
    const std::int64_t pair_sum = theta[0] + theta[n];
    for (int j = 1; j < n; ++j)
        if (theta[j] + theta[n + j] != pair_sum)
            throw std::invalid_argument(
                "not an automorphism: theta_j + theta_{n+j} must be constant over j");
    const std::int64_t top = theta[2 * n];
    std::vector<std::int64_t> w(4 * n + 3);
    auto posY = [&](int m) { return m; };
    auto posX = [&](int m) { return 4 * n + 3 - m; };
    w[0] = pair_sum + top;  // Z
    for (int j = 1; j <= n; ++j) {
        w[posX(j)] = theta[j - 1];
        w[posX(n + j)] = theta[n + j - 1];
        w[posY(j)] = theta[n + j - 1] + top;
        w[posY(n + j)] = theta[j - 1] + top;
    }
    w[posY(2 * n + 1)] = top;
    w[posX(2 * n + 1)] = pair_sum;
    return w;
}

std::vector<std::int64_t> heisenberg_weight_vector(int n, const std::vector<std::int64_t>& theta) {
    if (static_cast<int>(theta.size()) != 2 * n)
        throw std::invalid_argument("heisenberg_weight_vector: expected 2n generator weights");
    const std::int64_t pair_sum = theta[0] + theta[n];
    for (int j = 1; j < n; ++j)
        if (theta[j] + theta[n + j] != pair_sum)
            throw std::invalid_argument(
                "not an automorphism: theta_j + theta_{n+j} must be constant over j");
    std::vector<std::int64_t> w(2 * n + 1);
    auto posX = [&](int m) { return 2 * n + 1 - m; };
    for (int j = 1; j <= 2 * n; ++j) w[posX(j)] = theta[j - 1];
    w[posX(2 * n + 1)] = pair_sum;
    return w;
}

std::vector<DilationFamily> enumerate_df_weights(int n, std::int64_t max_weight) {
    if (max_weight < 1) throw std::invalid_argument("enumerate_df_weights: max_weight must be >= 1");
    auto algebra = build_dynin_folland(n);
    std::vector<DilationFamily> out;
    const int m = 2 * n + 1;
    std::vector<std::int64_t> theta(m, 1);
    while (true) {
        std::int64_t g = 0;
        for (std::int64_t t : theta) g = std::gcd(g, t);
        bool admissible = (g == 1);
        if (admissible) {
            const std::int64_t pair_sum = theta[0] + theta[n];
            for (int j = 1; j < n && admissible; ++j)
                if (theta[j] + theta[n + j] != pair_sum) admissible = false;
        }
        if (admissible) out.push_back(validate_weights(algebra, df_weight_vector(n, theta)));
        int pos = m - 1;
        while (pos >= 0 && theta[pos] == max_weight) theta[pos--] = 1;
        if (pos < 0) break;
        ++theta[pos];
    }
    return out;
}

double quasinorm(const DualVector& l, const DilationFamily& D) {
    if (l.algebra.get() != D.algebra.get() && !l.algebra->same_as(*D.algebra))
        throw std::invalid_argument("incompatible operands: dual vector vs dilation family");
    double best = 0.0;
    for (int j = 0; j < l.coeffs.size(); ++j) {
        const double v = std::pow(std::abs(l.coeffs(j)), 1.0 / static_cast<double>(D.weights[j]));
        if (v > best) best = v;
    }
    return best;
}

DualVector dilate_dual(const DualVector& l, double r, const DilationFamily& D) {
    if (r <= 0.0) throw std::invalid_argument("dilate_dual: r must be positive");
    Eigen::VectorXd out(l.coeffs.size());
    for (int j = 0; j < l.coeffs.size(); ++j)
        out(j) = l.coeffs(j) * std::pow(r, static_cast<double>(D.weights[j]));
    return DualVector(l.algebra, std::move(out));
}

}  // namespace nilspectra

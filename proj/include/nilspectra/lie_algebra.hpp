#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilspectra/rational.hpp"

namespace nilspectra {

class GradedLieAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

/// A graded nilpotent Lie algebra with exact rational structure constants.
///
/// Basis ordering follows the source conventions throughout:
///   Heisenberg  h_n      : X_{2n+1}, X_{2n}, ..., X_1
///   Dynin-Folland h_{n,2}: Z, Y_1, ..., Y_{2n+1}, X_{2n+1}, ..., X_1
///   Engel               : X_1, X_2, X_3, X_4
/// Structure constants are stored only for index pairs i < j (0-based
/// positions in the basis order); antisymmetry supplies the rest.
class GradedLieAlgebra {
public:
    // target index -> coefficient, for one (i,j) pair
    using BracketRow = std::vector<std::pair<int, Rational>>;

    GradedLieAlgebra(std::string family, int n, std::vector<std::string> labels,
                     std::vector<int> strata, int step,
                     std::map<std::pair<int, int>, BracketRow> brackets);

    int dim() const { return static_cast<int>(labels_.size()); }
    int step() const { return step_; }
    int n() const { return n_; }
    const std::string& family() const { return family_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    int stratum(int i) const { return strata_.at(i); }
    const std::vector<int>& strata() const { return strata_; }

    /// Position of a basis label, or -1 when absent.
    int index_of(const std::string& label) const;

    /// c_{ij}^k with antisymmetry applied; zero when not stored.
    Rational structure_constant(int i, int j, int k) const;

    /// All nonzero targets of [e_i, e_j] (signed, any i != j).
    BracketRow bracket_row(int i, int j) const;

    const std::map<std::pair<int, int>, BracketRow>& stored_brackets() const { return brackets_; }

    /// Positions of basis vectors commuting with the whole algebra.
    std::vector<int> center_indices() const;

    /// First violation of stratum(k) == stratum(i) + stratum(j), if any.
    std::optional<std::tuple<int, int, int>> gradation_violation() const;

    bool same_as(const GradedLieAlgebra& other) const;

private:
    std::string family_;
    int n_;
    std::vector<std::string> labels_;
    std::vector<int> strata_;
    int step_;
    std::map<std::pair<int, int>, BracketRow> brackets_;
};

/// Element of a Lie algebra in the fixed basis (real coordinates).
struct AlgebraElement {
    AlgebraPtr algebra;
    Eigen::VectorXd coeffs;

    AlgebraElement(AlgebraPtr alg, Eigen::VectorXd c);
    static AlgebraElement basis(AlgebraPtr alg, int index);
    static AlgebraElement zero(AlgebraPtr alg);
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(double s, const AlgebraElement& a);

AlgebraPtr build_heisenberg(int n);
AlgebraPtr build_dynin_folland(int n);
AlgebraPtr build_engel();

/// Bilinear extension of the structure constants.
AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b);

/// Max absolute Jacobi residual over all basis triples, exact.
Rational jacobi_residual(const GradedLieAlgebra& algebra);

/// JSON document {dim, labels[], step, strata[], brackets:[{i,j,k,num,den}]}
/// with 1-based indices into the labels array.
std::string algebra_to_json(const GradedLieAlgebra& algebra);
AlgebraPtr algebra_from_json(const std::string& text);

}  // namespace nilspectra

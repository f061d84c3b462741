#pragma once

#include <cstdint>

#include "nilspectra/diffop.hpp"
#include "nilspectra/dilations.hpp"

namespace nilspectra {

/// Noncommutative sum-of-powers form sum_j sign_j c_j V_j^{power_j} in the
/// universal enveloping algebra, with strictly positive coefficients and
/// even powers.
struct RocklandForm {
    struct Term {
        double coeff = 1.0;       // strictly positive
        int sign = 1;             // +1 or -1
        int basis_index = 0;      // position in the algebra basis
        std::int64_t power = 2;   // positive even
    };

    AlgebraPtr algebra;
    std::vector<Term> terms;
};

enum class RocklandStatus { VerifiedClassical, HomogeneousUnverified };

struct RocklandValidation {
    RocklandStatus status = RocklandStatus::HomogeneousUnverified;
    std::int64_t nu = 0;   // homogeneous degree
    std::int64_t nu0 = 0;  // nu / 2
    std::string detail;
};

/// Homogeneity and classical-pattern check of a form against a dilation
/// family. Throws std::domain_error naming the offending pair of terms when
/// the form is not homogeneous; certifies the classical sum-of-powers
/// pattern (even powers, positive coefficients, sign (-1)^{nu0/theta_j},
/// index set = whole basis or exactly the first stratum) and otherwise
/// returns homogeneous-unverified.
RocklandValidation validate_rockland_classical(const RocklandForm& form, const DilationFamily& D);

/// Symbolic image of a validated form under the representation table of its
/// algebra family: sum_j sign_j c_j dpi(V_j)^{power_j}. Powers above
/// max_power are refused (symbolic expansion grows combinatorially).
DiffOperator assemble_operator(const RocklandForm& form, double rho, std::int64_t max_power = 16);

/// Built-in forms.
RocklandForm sublaplacian_form_df(int n);                 // -(X_1^2+..+X_{2n}^2+Y_{2n+1}^2)
RocklandForm sum_of_squares_form_heisenberg(int n);       // -(X_1^2+..+X_{2n}^2)
RocklandForm anharmonic_r_form(int theta1, int theta2);   // (-1)^t2 X_1^{2 t2} + (-1)^t1 X_2^{2 t1}

/// Classical form over the whole basis (or the first stratum) for given
/// generator weights: power_j = 2 nu0 / theta_j, sign (-1)^{nu0/theta_j}.
RocklandForm classical_form(const DilationFamily& D, std::int64_t nu0,
                            const std::vector<double>& coeffs, bool first_stratum_only);

/// JSON parse: {terms:[{coeff, sign, basis, power}]}, basis as 1-based index
/// or label.
RocklandForm form_from_json(const AlgebraPtr& algebra, const std::string& text);

}  // namespace nilspectra

#pragma once

#include <string>

#include "nilspectra/dilations.hpp"
#include "nilspectra/rational.hpp"

namespace nilspectra {

/// Closed-form eigenvalue-counting prediction N(lambda) ~ |rho|^rho_power *
/// lambda^lambda_exponent above a central threshold; exponents exact.
struct CountEstimate {
    Rational lambda_exponent;  // (Q - Q_center) / nu
    Rational rho_power;        // prefactor power of |rho| (d_pi^{-1})
    std::string threshold;     // textual description of the empty-ball region
    std::string source;        // which estimate family produced it
};

/// Predictions for the flat-orbit families, from the dilation data:
/// exponent (Q - Q_center)/nu, prefactor |rho|^{-n} (Heisenberg) or
/// |rho|^{-(2n+1)} (Dynin-Folland).
CountEstimate predict_counting(const DilationFamily& D, std::int64_t nu);

/// Generic SI/Z prediction from (Q, Q_center) and the formal dimension
/// written as d_pi = |rho|^pfaffian_power.
CountEstimate predict_counting_generic(std::int64_t Q, std::int64_t Q_center, std::int64_t nu,
                                       std::int64_t pfaffian_power);

struct EigenGrowth {
    Rational s_exponent;  // lambda_s ~ (...) s^{s_exponent}
    Rational rho_power;
};

/// Inverts a counting estimate: s_exponent = 1/lambda_exponent and
/// rho scaling (-rho_power) * s_exponent.
EigenGrowth predict_eigengrowth(const CountEstimate& estimate);

/// Anharmonic oscillator on R: N(lambda) ~ lambda^{(t1+t2)/(2 t1 t2)}.
CountEstimate anharmonic_r_exponents(std::int64_t theta1, std::int64_t theta2);

}  // namespace nilspectra

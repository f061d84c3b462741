#include "nilspectra/counting.hpp"

#include <stdexcept>

namespace nilspectra {

CountEstimate predict_counting(const DilationFamily& D, std::int64_t nu) {
    if (nu < 1) throw std::invalid_argument("predict_counting: nu must be positive");
    const auto& family = D.algebra->family();
    std::int64_t pf_power = 0;
    if (family == "heisenberg")
        pf_power = D.algebra->n();
    else if (family == "dynin-folland")
        pf_power = 2 * D.algebra->n() + 1;
    else
        throw std::invalid_argument("predict_counting: flat-orbit estimates exist for the "
                                    "Heisenberg and Dynin-Folland families only");
    CountEstimate est = predict_counting_generic(D.Q, D.Q_center, nu, pf_power);
    est.source = family == "heisenberg" ? "heisenberg flat orbit" : "dynin-folland flat orbit";
    return est;
}

CountEstimate predict_counting_generic(std::int64_t Q, std::int64_t Q_center, std::int64_t nu,
                                       std::int64_t pfaffian_power) {
    if (nu < 1) throw std::invalid_argument("predict_counting: nu must be positive");
    if (Q <= Q_center) throw std::invalid_argument("predict_counting: Q must exceed Q_center");
    CountEstimate est;
    est.lambda_exponent = Rational(Q - Q_center, nu);
    est.rho_power = Rational(-pfaffian_power);
    est.threshold =
        "zero when lambda^{" + Rational(Q_center, nu).str() + "} < |rho| (empty ball)";
    est.source = "generic SI/Z flat orbit";
    return est;
}

EigenGrowth predict_eigengrowth(const CountEstimate& estimate) {
    if (!(Rational(0) < estimate.lambda_exponent))
        throw std::invalid_argument("predict_eigengrowth: lambda exponent must be positive");
    EigenGrowth g;
    g.s_exponent = Rational(1) / estimate.lambda_exponent;
    g.rho_power = (-estimate.rho_power) * g.s_exponent;
    return g;
}

CountEstimate anharmonic_r_exponents(std::int64_t theta1, std::int64_t theta2) {
    if (theta1 < 1 || theta2 < 1)
        throw std::invalid_argument("anharmonic_r_exponents: weights must be positive integers");
    CountEstimate est;
    est.lambda_exponent = Rational(theta1 + theta2, 2 * theta1 * theta2);
    est.rho_power = Rational(0);
    est.threshold = "zero when lambda^{1/(theta_1+theta_2)} < |rho|";
    est.source = "anharmonic oscillator on R";
    return est;
}

}  // namespace nilspectra

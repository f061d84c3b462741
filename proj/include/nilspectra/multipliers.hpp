#pragma once

#include <cstdint>

#include "nilspectra/rational.hpp"

namespace nilspectra {

/// L^p-L^q multiplier exponents for a positive Rockland operator of
/// homogeneous degree nu on a group of homogeneous dimension Q, with
/// alpha = Q/nu:
///   spectral growth   tau(E_(0,lambda)) ~ lambda^alpha
///   heat decay        ||e^{-tR}||_{p->q} <= C t^{heat_exponent}
///   Bessel threshold  gamma >= alpha (1/p - 1/q)
/// The Sobolev gap is reported in both unit conventions (the displayed
/// (Q/nu)(1/p - 1/q) and the classical Q(1/p - 1/q)).
struct MultiplierQuery {
    double p = 2.0;
    double q = 2.0;
    std::int64_t Q = 0;
    std::int64_t nu = 0;

    // outputs
    Rational alpha;               // Q / nu
    double heat_exponent = 0.0;   // -alpha (1/p - 1/q)
    double gamma_threshold = 0.0; // alpha (1/p - 1/q)
    double sobolev_gap = 0.0;     // (Q/nu)(1/p - 1/q), as displayed
    double sobolev_gap_classical = 0.0;  // Q (1/p - 1/q)
};

/// Fills the outputs; requires 1 < p <= 2 <= q < infinity.
MultiplierQuery multiplier_bounds(MultiplierQuery query);

}  // namespace nilspectra

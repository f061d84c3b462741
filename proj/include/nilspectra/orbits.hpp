#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilspectra/dilations.hpp"

namespace nilspectra {

/// Flat coadjoint orbit through rho * Z^* for the Heisenberg or
/// Dynin-Folland family: codimension one, spanning every non-central dual
/// direction. The formal dimension d_pi is |Pf(rho Z^*)|.
struct FlatOrbit {
    AlgebraPtr algebra;
    double rho = 0.0;
    std::vector<int> span_indices;  // non-central dual directions
    int center_index = 0;
    double pfaffian = 0.0;
    double formal_dimension = 0.0;
    int rho_exponent = 0;  // pfaffian = |rho|^rho_exponent
};

FlatOrbit flat_orbit(const AlgebraPtr& algebra, double rho);

/// Orbital measure of the quasi-norm ball intersected with a flat orbit,
/// reported in structured form: value = prefactor * |rho|^rho_power *
/// lambda^lambda_power above the central threshold, 0 below.
struct OrbitBallMeasure {
    double prefactor = 0.0;      // 2^(d-1), the box-side constant
    int rho_power = 0;           // power of |rho| from 1/d_pi
    std::int64_t lambda_power = 0;  // Q - Q_center
    double threshold = 0.0;      // |rho|^(1/Q_center); empty ball below it
    double value = 0.0;
};

OrbitBallMeasure ball_orbit_measure_closed(const FlatOrbit& orbit, double lam,
                                           const DilationFamily& D);

struct McEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t accepted = 0;
    std::uint64_t samples = 0;
};

/// Rejection sampling over the bounding box prod [-lam^theta_j, lam^theta_j]
/// in the orbit's non-central coordinates, weighted by 1/d_pi. Acceptance
/// counts are integers, so the result is bit-identical for any worker count.
McEstimate ball_orbit_measure_mc(const FlatOrbit& orbit, double lam, const DilationFamily& D,
                                 std::uint64_t samples, std::uint64_t seed, int threads = 0);

/// Engel coadjoint orbit classification for l = delta X_4^* + gamma X_3^* +
/// beta X_2^* + alpha X_1^*.
struct EngelOrbitFamily {
    enum class Kind { Cylinder, Plane, Point } kind;
    double p1 = 0.0;  // cylinder: delta; plane: gamma; point: alpha
    double p2 = 0.0;  // cylinder: beta;  point: beta
    std::string describe() const;
};

EngelOrbitFamily engel_orbit_family(const DualVector& l);

}  // namespace nilspectra

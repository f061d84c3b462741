#include "nilspectra/multipliers.hpp"

#include <stdexcept>

namespace nilspectra {

MultiplierQuery multiplier_bounds(MultiplierQuery query) {
    if (!(query.p > 1.0 && query.p <= 2.0 && query.q >= 2.0))
        throw std::invalid_argument("multiplier_bounds: need 1 < p <= 2 <= q < infinity");
    if (query.Q < 1 || query.nu < 1)
        throw std::invalid_argument("multiplier_bounds: Q and nu must be positive");
    query.alpha = Rational(query.Q, query.nu);
    const double gap = 1.0 / query.p - 1.0 / query.q;
    const double alpha = query.alpha.to_double();
    query.gamma_threshold = alpha * gap;
    query.heat_exponent = -alpha * gap;
    query.sobolev_gap = alpha * gap;
    query.sobolev_gap_classical = static_cast<double>(query.Q) * gap;
    return query;
}

}  // namespace nilspectra

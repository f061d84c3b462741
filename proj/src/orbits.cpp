#include "nilspectra/orbits.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "nilspectra/rng.hpp"

namespace nilspectra {

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("NILSPECTRA_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) return cap;
        if (cap >= 1) return cap;
    }
    return hw;
}

FlatOrbit flat_orbit(const AlgebraPtr& algebra, double rho) {
    if (rho == 0.0) throw std::invalid_argument("degenerate orbit: rho must be nonzero");
    const auto& fam = algebra->family();
    FlatOrbit orbit;
    orbit.algebra = algebra;
    orbit.rho = rho;
    if (fam == "heisenberg") {
        orbit.rho_exponent = algebra->n();
    } else if (fam == "dynin-folland") {
        orbit.rho_exponent = 2 * algebra->n() + 1;
    } else {
        throw std::invalid_argument("unsupported: flat orbits are implemented for the Heisenberg "
                                    "and Dynin-Folland families only");
    }
    const auto centers = algebra->center_indices();
    if (centers.size() != 1) throw std::logic_error("flat_orbit: expected one-dimensional center");
    orbit.center_index = centers.front();
    for (int i = 0; i < algebra->dim(); ++i)
        if (i != orbit.center_index) orbit.span_indices.push_back(i);
    orbit.pfaffian = std::pow(std::abs(rho), orbit.rho_exponent);
    orbit.formal_dimension = orbit.pfaffian;
    return orbit;
}

static void require_compatible(const FlatOrbit& orbit, const DilationFamily& D) {
    if (orbit.algebra.get() != D.algebra.get() && !orbit.algebra->same_as(*D.algebra))
        throw std::invalid_argument("incompatible operands: orbit vs dilation family");
}

OrbitBallMeasure ball_orbit_measure_closed(const FlatOrbit& orbit, double lam,
                                           const DilationFamily& D) {
    require_compatible(orbit, D);
    if (lam <= 0.0) throw std::invalid_argument("ball measure: lambda must be positive");
    OrbitBallMeasure m;
    m.rho_power = -orbit.rho_exponent;
    m.prefactor = std::pow(2.0, static_cast<double>(orbit.span_indices.size()));
    for (int j : orbit.span_indices) m.lambda_power += D.weights[j];
    const std::int64_t wz = D.weights[orbit.center_index];
    m.threshold = std::pow(std::abs(orbit.rho), 1.0 / static_cast<double>(wz));
    if (lam < m.threshold) {
        m.value = 0.0;
        return m;
    }
    double v = 1.0 / orbit.formal_dimension;
    for (int j : orbit.span_indices)
        v *= 2.0 * std::pow(lam, static_cast<double>(D.weights[j]));
    m.value = v;
    return m;
}

McEstimate ball_orbit_measure_mc(const FlatOrbit& orbit, double lam, const DilationFamily& D,
                                 std::uint64_t samples, std::uint64_t seed, int threads) {
    require_compatible(orbit, D);
    if (samples < 10000) throw std::invalid_argument("ball measure mc: need at least 1e4 samples");
    if (threads <= 0) threads = thread_budget();

    const int dfree = static_cast<int>(orbit.span_indices.size());
    std::vector<double> half(dfree);
    double box_volume = 1.0;
    for (int a = 0; a < dfree; ++a) {
        half[a] = std::pow(lam, static_cast<double>(D.weights[orbit.span_indices[a]]));
        box_volume *= 2.0 * half[a];
    }

    const CounterRng rng(seed);
    const DilationFamily& fam = D;
    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
        Eigen::VectorXd l = Eigen::VectorXd::Zero(orbit.algebra->dim());
        l(orbit.center_index) = orbit.rho;
        std::uint64_t acc = 0;
        DualVector dual(orbit.algebra, l);
        for (std::uint64_t s = lo; s < hi; ++s) {
            for (int a = 0; a < dfree; ++a)
                dual.coeffs(orbit.span_indices[a]) = rng.uniform(s, a, -half[a], half[a]);
            if (quasinorm(dual, fam) <= lam) ++acc;
        }
        return acc;
    };

    std::uint64_t accepted = 0;
    if (threads == 1 || samples < 100000) {
        accepted = count_range(0, samples);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = samples / threads;
        for (int t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = (t + 1 == threads) ? samples : lo + chunk;
            pool.emplace_back([&, t, lo, hi] { partial[t] = count_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (std::uint64_t p : partial) accepted += p;  // integer reduction, order-free
    }

    McEstimate est;
    est.accepted = accepted;
    est.samples = samples;
    const double p = static_cast<double>(accepted) / static_cast<double>(samples);
    const double scale = box_volume / orbit.formal_dimension;
    est.estimate = p * scale;
    est.standard_error = scale * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return est;
}

std::string EngelOrbitFamily::describe() const {
    switch (kind) {
        case Kind::Cylinder:
            return "cylinder(delta=" + std::to_string(p1) + ", beta=" + std::to_string(p2) + ")";
        case Kind::Plane:
            return "plane(gamma=" + std::to_string(p1) + ")";
        case Kind::Point:
            return "point(alpha=" + std::to_string(p1) + ", beta=" + std::to_string(p2) + ")";
    }
    return {};
}

EngelOrbitFamily engel_orbit_family(const DualVector& l) {
    if (l.algebra->family() != "engel")
        throw std::invalid_argument("engel_orbit_family: dual vector must live on the Engel dual");
    const double alpha = l.coeffs(l.algebra->index_of("X_1"));
    const double beta = l.coeffs(l.algebra->index_of("X_2"));
    const double gamma = l.coeffs(l.algebra->index_of("X_3"));
    const double delta = l.coeffs(l.algebra->index_of("X_4"));
    if (delta != 0.0) return {EngelOrbitFamily::Kind::Cylinder, delta, beta};
    if (gamma != 0.0) return {EngelOrbitFamily::Kind::Plane, gamma, 0.0};
    return {EngelOrbitFamily::Kind::Point, alpha, beta};
}

}  // namespace nilspectra

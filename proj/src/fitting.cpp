#include "nilspectra/fitting.hpp"

#include <cmath>
#include <stdexcept>

namespace nilspectra {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<std::pair<double, double>> logpairs;
    logpairs.reserve(pairs.size());
    for (const auto& [lam, count] : pairs)
        if (lam > 0.0 && count > 0.0) logpairs.emplace_back(std::log(lam), std::log(count));
    if (logpairs.size() < 10)
        throw std::invalid_argument("fit_exponent: need at least 10 positive points");

    const double n = static_cast<double>(logpairs.size());
    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : logpairs) { sx += x; sy += y; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : logpairs) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_exponent: degenerate abscissa");

    FitResult fit;
    fit.points = logpairs.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0;
    for (const auto& [x, y] : logpairs) {
        const double r = y - (fit.intercept + fit.slope * x);
        ss_res += r * r;
    }
    fit.stderr_slope = logpairs.size() > 2
                           ? std::sqrt(ss_res / (n - 2.0) / sxx)
                           : 0.0;
    return fit;
}

FitResult fit_exponent_eigenvalues(const std::vector<double>& eigenvalues, std::size_t lo,
                                   std::size_t hi) {
    if (lo < 1 || hi < lo || hi > eigenvalues.size())
        throw std::invalid_argument("fit_exponent: window out of range");
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(hi - lo + 1);
    for (std::size_t s = lo; s <= hi; ++s)
        pairs.emplace_back(eigenvalues[s - 1], static_cast<double>(s));
    return fit_exponent(pairs);
}

std::pair<std::size_t, std::size_t> default_fit_window(std::size_t count, int converged_window) {
    std::size_t hi = count;
    if (converged_window >= 0) hi = std::min<std::size_t>(hi, converged_window + 1);
    std::size_t lo = std::max<std::size_t>(1, count / 10);
    if (lo > hi) lo = 1;
    return {lo, hi};
}

}  // namespace nilspectra

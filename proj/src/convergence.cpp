#include "nilspectra/convergence.hpp"

#include <cmath>
#include <stdexcept>

namespace nilspectra {

ConvergenceReport grid_convergence(const std::vector<SpectrumResult>& results) {
    if (results.size() < 2)
        throw std::invalid_argument("grid_convergence: need at least two refinements");
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].problem != results[0].problem || results[i].rho != results[0].rho ||
            results[i].grid.L != results[0].grid.L)
            throw std::invalid_argument("grid_convergence: mismatched problems");
        if (results[i].grid.N <= results[i - 1].grid.N)
            throw std::invalid_argument("grid_convergence: refinements must increase N");
    }

    std::size_t common = results[0].eigenvalues.size();
    for (const auto& r : results) common = std::min(common, r.eigenvalues.size());
    // Only entries converged in every run participate.
    std::size_t usable = 0;
    for (std::size_t s = 0; s < common; ++s) {
        bool ok = true;
        for (const auto& r : results) ok = ok && r.converged[s];
        if (!ok) break;
        usable = s + 1;
    }

    const auto& fine = results.back();
    const auto& prev = results[results.size() - 2];
    ConvergenceReport report;
    bool window_open = true;
    for (std::size_t s = 0; s < usable; ++s) {
        ConvergenceEntry e;
        e.index = static_cast<int>(s);
        e.value = fine.eigenvalues[s];
        const double denom = std::max(std::abs(fine.eigenvalues[s]), 1e-300);
        e.rel_change = std::abs(fine.eigenvalues[s] - prev.eigenvalues[s]) / denom;
        e.stable_digits =
            e.rel_change > 0.0 ? std::max(0, static_cast<int>(std::floor(-std::log10(e.rel_change))))
                               : 16;
        if (results.size() >= 3) {
            const auto& prev2 = results[results.size() - 3];
            const double d1 = prev.eigenvalues[s] - prev2.eigenvalues[s];
            const double d2 = fine.eigenvalues[s] - prev.eigenvalues[s];
            const double h1 = prev2.grid.h(), h2 = prev.grid.h(), h3 = fine.grid.h();
            if (d2 != 0.0 && h2 != h3) {
                // |error| ~ C h^p: fit p from consecutive differences
                const double ratio = std::abs(d1 / d2);
                const double hratio = (h1 * h1 - h2 * h2) / (h2 * h2 - h3 * h3);
                if (ratio > 0.0 && hratio > 0.0)
                    e.observed_order = 2.0 * std::log(ratio) / std::log(hratio);
            }
        }
        if (window_open && e.rel_change < 0.01)
            report.converged_window = static_cast<int>(s);
        else
            window_open = false;
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace nilspectra

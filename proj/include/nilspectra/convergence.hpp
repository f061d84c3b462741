#pragma once

#include "nilspectra/eigensolver.hpp"

namespace nilspectra {

struct ConvergenceEntry {
    int index = 0;
    double value = 0.0;            // finest-grid eigenvalue
    double rel_change = 0.0;       // relative change across the last refinement
    int stable_digits = 0;
    double observed_order = 0.0;   // Richardson ratio estimate (0 when < 3 grids)
};

struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    int converged_window = -1;  // largest index with rel change < 1% for all indices below
};

/// Richardson-style refinement check over >= 2 solves of the same problem
/// (same L, rho, increasing N, converged entries only).
ConvergenceReport grid_convergence(const std::vector<SpectrumResult>& results);

}  // namespace nilspectra

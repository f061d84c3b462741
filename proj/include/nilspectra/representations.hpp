#pragma once

#include "nilspectra/diffop.hpp"
#include "nilspectra/group_law.hpp"

namespace nilspectra {

/// Infinitesimal generic representation d(pi_rho) of the Dynin-Folland
/// algebra as operators on functions of (t_1..t_{2n+1}); variable v
/// corresponds to t_{v+1}.
///   Z        -> 2 pi i rho
///   Y_j      -> 2 pi i rho t_j
///   X_{2n+1} -> d_{2n+1}
///   X_{n+j}  -> d_{n+j} + t_j d_{2n+1} / 2
///   X_j      -> d_j     - t_{n+j} d_{2n+1} / 2
DiffOperator dpi_basis_df(int basis_index, double rho, int n);

/// Schrodinger representation of the Heisenberg algebra on functions of
/// (t_1..t_n): X_{2n+1} -> 2 pi i rho, X_{n+j} -> 2 pi i rho t_j,
/// X_j -> d_j.
DiffOperator dpi_basis_heisenberg(int basis_index, double rho, int n);

/// dpi by basis label for either family.
DiffOperator dpi_basis(const AlgebraPtr& algebra, const std::string& label, double rho);

/// Group representation pi_rho in split-exponential coordinates:
/// (pi_rho(z,y,x) f)(t) = exp(2 pi i rho z) exp(2 pi i rho <t,y>) f(t . x).
PolyExpFunction rep_action(const GroupElement& g, double rho, const PolyExpFunction& f);

struct ResidualReport {
    double max_residual = 0.0;
    std::string worst_case;
};

/// Checks [dpi(V), dpi(W)] = dpi([V,W]) for all basis pairs, evaluated on a
/// battery of test functions at deterministic sample points; returns the
/// max relative residual.
ResidualReport verify_commutators(const AlgebraPtr& algebra, double rho, int sample_points = 128);

/// Checks pi(g) pi(g') f = pi(g g') f on random group pairs and test
/// functions (Dynin-Folland only).
ResidualReport verify_homomorphism(double rho, int n, int trials, std::uint64_t seed);

/// Deterministic battery of polynomial-times-Gaussian test functions.
std::vector<PolyExpFunction> test_function_battery(int vars);

}  // namespace nilspectra

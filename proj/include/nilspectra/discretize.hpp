#pragma once

#include <Eigen/SparseCore>
#include <string>

namespace nilspectra {

/// Uniform grid with nodes t_i = -L + i h, h = 2L/(N-1). Homogeneous
/// Dirichlet values are imposed just outside the grid (stencils read 0
/// beyond the walls).
struct GridSpec {
    int dims = 1;   // 1 or 3
    double L = 6.0; // half width per axis
    int N = 16;     // points per axis, >= 16

    GridSpec() = default;
    GridSpec(int dims_, double L_, int N_);

    double h() const { return 2.0 * L / (N - 1); }
    double node(int i) const { return -L + i * h(); }
    long total_points() const;
};

/// Symmetric positive semidefinite discretized operator with provenance.
struct SparseOperator {
    Eigen::SparseMatrix<double> matrix;
    GridSpec grid;
    std::string problem;
    double rho = 0.0;
    int theta1 = 0;
    int theta2 = 0;

    long dim() const { return matrix.rows(); }
    /// Max |A - A^T| entry relative to max |A| entry.
    double symmetry_defect() const;
};

/// 1D operator (D2)^{theta2} + diag((2 pi |rho| t)^{2 theta1}), D2 the
/// standard 3-point second-difference matrix; theta1 = theta2 = 1 is the
/// harmonic oscillator -d^2/dt^2 + 4 pi^2 rho^2 t^2.
SparseOperator discretize_1d(int theta1, int theta2, double rho, const GridSpec& grid);

/// 3D harmonic oscillator on H_1: D1~^T D1~ + D2~^T D2~ + M^2 from the
/// skew-symmetric central-difference fields X1 = d1 - t2 d3 / 2 and
/// X2 = d2 + t1 d3 / 2 and M = diag(2 pi |rho| t3). A fourth-difference
/// filter (h^2/4) sum_a L_a^2 (an O(h^2)-consistent perturbation) removes
/// the grid-scale null modes of the squared central differences; pass
/// stabilize = false for the raw assembly.
SparseOperator discretize_hho_h1(double rho, const GridSpec& grid, bool stabilize = true);

}  // namespace nilspectra

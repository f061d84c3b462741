#include "nilspectra/discretize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace nilspectra {

GridSpec::GridSpec(int dims_, double L_, int N_) : dims(dims_), L(L_), N(N_) {
    if (dims != 1 && dims != 3) throw std::invalid_argument("grid: dims must be 1 or 3");
    if (L <= 0.0) throw std::invalid_argument("grid: half width must be positive");
    if (N < 16) throw std::invalid_argument("grid: need at least 16 points per axis");
}

long GridSpec::total_points() const {
    long p = 1;
    for (int d = 0; d < dims; ++d) p *= N;
    return p;
}

double SparseOperator::symmetry_defect() const {
    Eigen::SparseMatrix<double> diff = Eigen::SparseMatrix<double>(matrix.transpose()) - matrix;
    double worst = 0.0, scale = 0.0;
    for (int c = 0; c < diff.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(diff, c); it; ++it)
            worst = std::max(worst, std::abs(it.value()));
    for (int c = 0; c < matrix.outerSize(); ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(matrix, c); it; ++it)
            scale = std::max(scale, std::abs(it.value()));
    return scale > 0.0 ? worst / scale : worst;
}

SparseOperator discretize_1d(int theta1, int theta2, double rho, const GridSpec& grid) {
    if (grid.dims != 1) throw std::invalid_argument("discretize_1d: grid must be one-dimensional");
    if (theta1 < 1 || theta2 < 1)
        throw std::invalid_argument("discretize_1d: theta parameters must be >= 1");
    const int N = grid.N;
    const double h = grid.h();
    const double inv_h2 = 1.0 / (h * h);

    Eigen::SparseMatrix<double> D2(N, N);
    {
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(3 * N);
        for (int i = 0; i < N; ++i) {
            trip.emplace_back(i, i, 2.0 * inv_h2);
            if (i > 0) trip.emplace_back(i, i - 1, -inv_h2);
            if (i + 1 < N) trip.emplace_back(i, i + 1, -inv_h2);
        }
        D2.setFromTriplets(trip.begin(), trip.end());
    }
    Eigen::SparseMatrix<double> A = D2;
    for (int p = 1; p < theta2; ++p) A = (A * D2).pruned();

    const double scale = 2.0 * std::numbers::pi * std::abs(rho);
    Eigen::SparseMatrix<double> V(N, N);
    {
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(N);
        for (int i = 0; i < N; ++i)
            trip.emplace_back(i, i, std::pow(scale * grid.node(i), 2 * theta1));
        V.setFromTriplets(trip.begin(), trip.end());
    }

    SparseOperator op;
    op.matrix = A + V;
    op.matrix.makeCompressed();
    op.grid = grid;
    op.problem = theta1 == 1 && theta2 == 1 ? "euclid1d" : "anharm1d";
    op.rho = rho;
    op.theta1 = theta1;
    op.theta2 = theta2;
    return op;
}

SparseOperator discretize_hho_h1(double rho, const GridSpec& grid, bool stabilize) {
    if (grid.dims != 3) throw std::invalid_argument("discretize_hho_h1: grid must be 3D");
    const int N = grid.N;
    const long total = grid.total_points();
    const double h = grid.h();
    const double inv_2h = 1.0 / (2.0 * h);
    auto index = [N](int i, int j, int k) { return (static_cast<long>(i) * N + j) * N + k; };

    // X1 = D1 - t2 D3 / 2, X2 = D2 + t1 D3 / 2 with central differences;
    // the coefficients are constant along axis 3, so c D3 is already skew.
    std::vector<Eigen::Triplet<double>> t1, t2;
    t1.reserve(4 * total);
    t2.reserve(4 * total);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                const long row = index(i, j, k);
                const double c1 = -0.5 * grid.node(j);  // coefficient of d3 in X1
                const double c2 = 0.5 * grid.node(i);   // coefficient of d3 in X2
                if (i + 1 < N) t1.emplace_back(row, index(i + 1, j, k), inv_2h);
                if (i > 0) t1.emplace_back(row, index(i - 1, j, k), -inv_2h);
                if (j + 1 < N) t2.emplace_back(row, index(i, j + 1, k), inv_2h);
                if (j > 0) t2.emplace_back(row, index(i, j - 1, k), -inv_2h);
                if (k + 1 < N) {
                    t1.emplace_back(row, index(i, j, k + 1), c1 * inv_2h);
                    t2.emplace_back(row, index(i, j, k + 1), c2 * inv_2h);
                }
                if (k > 0) {
                    t1.emplace_back(row, index(i, j, k - 1), -c1 * inv_2h);
                    t2.emplace_back(row, index(i, j, k - 1), -c2 * inv_2h);
                }
            }
    Eigen::SparseMatrix<double> X1(total, total), X2(total, total);
    X1.setFromTriplets(t1.begin(), t1.end());
    X2.setFromTriplets(t2.begin(), t2.end());

    Eigen::SparseMatrix<double> M2(total, total);
    {
        std::vector<Eigen::Triplet<double>> tm;
        tm.reserve(total);
        const double scale = 2.0 * std::numbers::pi * std::abs(rho);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    const double m = scale * grid.node(k);
                    tm.emplace_back(index(i, j, k), index(i, j, k), m * m);
                }
        M2.setFromTriplets(tm.begin(), tm.end());
    }

    Eigen::SparseMatrix<double> A =
        (Eigen::SparseMatrix<double>(X1.transpose()) * X1 +
         Eigen::SparseMatrix<double>(X2.transpose()) * X2 + M2)
            .pruned();

    if (stabilize) {
        // Narrow second differences per axis; (h^2/4) L_a^2 lifts the
        // pi-frequency modes invisible to the centered first differences.
        const double inv_h2 = 1.0 / (h * h);
        for (int axis = 0; axis < 3; ++axis) {
            std::vector<Eigen::Triplet<double>> tl;
            tl.reserve(3 * total);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    for (int k = 0; k < N; ++k) {
                        const long row = index(i, j, k);
                        tl.emplace_back(row, row, 2.0 * inv_h2);
                        const int a = axis == 0 ? i : axis == 1 ? j : k;
                        if (a > 0)
                            tl.emplace_back(row, axis == 0   ? index(i - 1, j, k)
                                                 : axis == 1 ? index(i, j - 1, k)
                                                             : index(i, j, k - 1),
                                            -inv_h2);
                        if (a + 1 < N)
                            tl.emplace_back(row, axis == 0   ? index(i + 1, j, k)
                                                 : axis == 1 ? index(i, j + 1, k)
                                                             : index(i, j, k + 1),
                                            -inv_h2);
                    }
            Eigen::SparseMatrix<double> L(total, total);
            L.setFromTriplets(tl.begin(), tl.end());
            A += (0.25 * h * h) * (L * L).pruned();
        }
    }

    SparseOperator op;
    op.matrix = A;
    op.matrix.makeCompressed();
    op.grid = grid;
    op.problem = "hho-h1";
    op.rho = rho;
    return op;
}

}  // namespace nilspectra

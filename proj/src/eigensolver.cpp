#include "nilspectra/eigensolver.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "nilspectra/rng.hpp"

namespace nilspectra {

void parallel_spmv(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& x,
                   Eigen::VectorXd& y, int threads) {
    y = A * x;
    (void)threads;  // column-major fallback, used only for small problems
}

namespace {

using RowMajorSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;

void spmv_rows(const RowMajorSparse& A, const Eigen::VectorXd& x, Eigen::VectorXd& y,
               int threads) {
    const long n = A.rows();
    if (threads <= 1 || n < 20000) {
        for (long r = 0; r < n; ++r) {
            double acc = 0.0;
            for (RowMajorSparse::InnerIterator it(A, r); it; ++it) acc += it.value() * x(it.col());
            y(r) = acc;
        }
        return;
    }
    std::vector<std::thread> pool;
    const long chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const long lo = t * chunk;
        const long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            for (long r = lo; r < hi; ++r) {
                double acc = 0.0;
                for (RowMajorSparse::InnerIterator it(A, r); it; ++it)
                    acc += it.value() * x(it.col());
                y(r) = acc;
            }
        });
    }
    for (auto& th : pool) th.join();
}

/// Jacobi-preconditioned conjugate gradient; reduction order is fixed so
/// repeated runs are bit-identical at any thread count.
class CgSolver {
public:
    CgSolver(const Eigen::SparseMatrix<double>& A, int threads)
        : A_(A), threads_(threads), inv_diag_(A.rows()) {
        for (long i = 0; i < A.rows(); ++i) {
            const double d = A.coeff(i, i);
            inv_diag_(i) = d > 0.0 ? 1.0 / d : 1.0;
        }
    }

    Eigen::VectorXd solve(const Eigen::VectorXd& b, double tol, int maxit) const {
        const long n = A_.rows();
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n), r = b, q(n);
        Eigen::VectorXd z = inv_diag_.cwiseProduct(r);
        Eigen::VectorXd p = z;
        double rz = r.dot(z);
        const double bnorm = b.norm();
        if (bnorm == 0.0) return x;
        for (int it = 0; it < maxit; ++it) {
            spmv_rows(A_, p, q, threads_);
            const double pq = p.dot(q);
            if (pq <= 0.0) break;  // matrix not SPD along p; return best effort
            const double alpha = rz / pq;
            x += alpha * p;
            r -= alpha * q;
            if (r.norm() <= tol * bnorm) break;
            z = inv_diag_.cwiseProduct(r);
            const double rz_new = r.dot(z);
            p = z + (rz_new / rz) * p;
            rz = rz_new;
        }
        return x;
    }

private:
    RowMajorSparse A_;
    int threads_;
    Eigen::VectorXd inv_diag_;
};

}  // namespace

SpectrumResult solve_dense(const SparseOperator& op, int k) {
    const long n = op.dim();
    if (k < 1 || k >= n) throw std::invalid_argument("solve_dense: need 1 <= k < dim");
    SpectrumResult out;
    out.grid = op.grid;
    out.problem = op.problem;
    out.rho = op.rho;

    // Exploit tridiagonal structure (1D second-difference operators).
    bool tridiagonal = true;
    for (int c = 0; c < op.matrix.outerSize() && tridiagonal; ++c)
        for (Eigen::SparseMatrix<double>::InnerIterator it(op.matrix, c); it; ++it)
            if (std::abs(it.row() - it.col()) > 1) { tridiagonal = false; break; }

    Eigen::VectorXd evals;
    if (tridiagonal) {
        Eigen::VectorXd diag(n), sub(n - 1);
        for (long i = 0; i < n; ++i) diag(i) = op.matrix.coeff(i, i);
        for (long i = 0; i + 1 < n; ++i) sub(i) = op.matrix.coeff(i + 1, i);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
        evals = es.eigenvalues();
        out.method = "dense-tridiagonal";
    } else {
        Eigen::MatrixXd dense(op.matrix);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense, Eigen::EigenvaluesOnly);
        evals = es.eigenvalues();
        out.method = "dense";
    }
    out.eigenvalues.assign(evals.data(), evals.data() + k);
    out.residuals.assign(k, 0.0);
    out.converged.assign(k, true);
    return out;
}

SpectrumResult solve_lanczos(const SparseOperator& op, int k, double tol, int max_cycles) {
    const long n = op.dim();
    if (k < 1 || k >= n) throw std::invalid_argument("solve_lanczos: need 1 <= k < dim");
    const int threads = thread_budget();
    const RowMajorSparse A_rows(op.matrix);

    // Inner operator: v -> A^{-1} v (shift-invert at zero).
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> apply_inverse;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
    CgSolver cg(op.matrix, threads);
    const bool use_factorization = n <= 20000;
    if (use_factorization) {
        ldlt.compute(op.matrix);
        if (ldlt.info() != Eigen::Success)
            throw std::runtime_error("solve_lanczos: LDLT factorization failed");
        apply_inverse = [&](const Eigen::VectorXd& v) { return ldlt.solve(v); };
    } else {
        apply_inverse = [&](const Eigen::VectorXd& v) { return cg.solve(v, 1e-10, 20000); };
    }

    auto true_residual = [&](const Eigen::VectorXd& y, double lambda) {
        Eigen::VectorXd Ay(n);
        spmv_rows(A_rows, y, Ay, threads);
        return (Ay - lambda * y).norm() / y.norm();
    };

    std::vector<double> locked_vals;
    std::vector<double> locked_res;
    std::vector<Eigen::VectorXd> locked_vecs;
    const CounterRng rng(0x1a2b3c4dULL);

    for (int cycle = 0; cycle < max_cycles && static_cast<int>(locked_vals.size()) < k; ++cycle) {
        const int want = k - static_cast<int>(locked_vals.size());
        const int m = static_cast<int>(
            std::min<long>(n - static_cast<long>(locked_vals.size()) - 1,
                           std::max(2 * want + 30, 60)));
        if (m < 2) break;

        Eigen::MatrixXd V(n, m);
        Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
        Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);

        Eigen::VectorXd v(n);
        for (long i = 0; i < n; ++i) v(i) = rng.uniform(cycle, i, -1.0, 1.0);
        for (const auto& q : locked_vecs) v -= q.dot(v) * q;
        v.normalize();

        int built = 0;
        for (int i = 0; i < m; ++i) {
            V.col(i) = v;
            ++built;
            Eigen::VectorXd w = apply_inverse(v);
            alpha(i) = v.dot(w);
            // Full reorthogonalization against locked and current bases (two passes).
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& q : locked_vecs) w -= q.dot(w) * q;
                w -= V.leftCols(i + 1) * (V.leftCols(i + 1).transpose() * w);
            }
            const double b = w.norm();
            if (i + 1 < m) {
                if (b < 1e-13) { break; }  // invariant subspace exhausted
                beta(i) = b;
                v = w / b;
            }
        }

        Eigen::VectorXd tdiag = alpha.head(built);
        Eigen::VectorXd tsub = beta.head(std::max(built - 1, 0));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(tdiag, tsub);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("solve_lanczos: tridiagonal eigensolve failed");

        // Largest theta of A^{-1} correspond to the smallest eigenvalues of A.
        for (int idx = built - 1; idx >= 0 && static_cast<int>(locked_vals.size()) < k + 4; --idx) {
            const double theta = es.eigenvalues()(idx);
            if (theta <= 0.0) continue;
            Eigen::VectorXd y = V.leftCols(built) * es.eigenvectors().col(idx);
            const double norm = y.norm();
            if (norm < 1e-12) continue;
            y /= norm;
            const double lambda = 1.0 / theta;
            const double res = true_residual(y, lambda);
            if (res <= tol * std::max(1.0, std::abs(lambda))) {
                locked_vals.push_back(lambda);
                locked_res.push_back(res);
                locked_vecs.push_back(std::move(y));
            }
        }
    }

    // Sort the locked pairs ascending; keep k (fill from unconverged estimates
    // only when the budget ran out, flagged accordingly).
    std::vector<int> order(locked_vals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return locked_vals[a] < locked_vals[b]; });

    SpectrumResult out;
    out.grid = op.grid;
    out.problem = op.problem;
    out.rho = op.rho;
    out.method = use_factorization ? "lanczos-ldlt" : "lanczos-cg";
    for (int i = 0; i < k && i < static_cast<int>(order.size()); ++i) {
        out.eigenvalues.push_back(locked_vals[order[i]]);
        out.residuals.push_back(locked_res[order[i]]);
        out.converged.push_back(true);
    }
    while (static_cast<int>(out.eigenvalues.size()) < k) {
        out.eigenvalues.push_back(std::numeric_limits<double>::quiet_NaN());
        out.residuals.push_back(std::numeric_limits<double>::infinity());
        out.converged.push_back(false);
    }
    return out;
}

SpectrumResult lowest_eigenvalues(const SparseOperator& op, int k, double tol) {
    if (op.dim() <= 4000) return solve_dense(op, k);
    return solve_lanczos(op, k, tol);
}

}  // namespace nilspectra

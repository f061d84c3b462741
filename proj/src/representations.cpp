#include "nilspectra/representations.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nilspectra/rng.hpp"

namespace nilspectra {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

DiffOperator scaled_coordinate(int vars, int var, Complex scale) {
    return DiffOperator::multiplication(Polynomial::variable(vars, var) * scale);
}

}  // namespace

DiffOperator dpi_basis_df(int basis_index, double rho, int n) {
    if (rho == 0.0) throw std::invalid_argument("degenerate representation: rho must be nonzero");
    const int vars = 2 * n + 1;
    const Complex i2pr(0.0, kTwoPi * rho);
    // basis order: Z, Y_1..Y_{2n+1}, X_{2n+1}..X_1
    if (basis_index == 0) return DiffOperator::multiplication(Polynomial::constant(vars, i2pr));
    if (basis_index <= 2 * n + 1) {
        const int j = basis_index;  // Y_j -> 2 pi i rho t_j
        return scaled_coordinate(vars, j - 1, i2pr);
    }
    if (basis_index >= 4 * n + 3)
        throw std::invalid_argument("dpi_basis_df: index out of range");
    const int m = 4 * n + 3 - basis_index;  // X_m
    if (m == 2 * n + 1) return DiffOperator::partial(vars, 2 * n);
    DiffOperator op = DiffOperator::partial(vars, m - 1);
    const int central = 2 * n;  // t_{2n+1}
    if (m > n) {
        // X_{n+j} -> d_{n+j} + t_j d_{2n+1} / 2, j = m - n
        const int j = m - n;
        op = op + DiffOperator::multiplication(Polynomial::variable(vars, j - 1) * Complex(0.5))
                      .compose(DiffOperator::partial(vars, central));
    } else {
        // X_j -> d_j - t_{n+j} d_{2n+1} / 2
        op = op - DiffOperator::multiplication(Polynomial::variable(vars, n + m - 1) * Complex(0.5))
                      .compose(DiffOperator::partial(vars, central));
    }
    return op;
}

DiffOperator dpi_basis_heisenberg(int basis_index, double rho, int n) {
    if (rho == 0.0) throw std::invalid_argument("degenerate representation: rho must be nonzero");
    const int vars = n;
    const Complex i2pr(0.0, kTwoPi * rho);
    if (basis_index < 0 || basis_index >= 2 * n + 1)
        throw std::invalid_argument("dpi_basis_heisenberg: index out of range");
    const int m = 2 * n + 1 - basis_index;  // X_m at position basis_index
    if (m == 2 * n + 1) return DiffOperator::multiplication(Polynomial::constant(vars, i2pr));
    if (m > n) return scaled_coordinate(vars, m - n - 1, i2pr);  // X_{n+j} -> 2 pi i rho t_j
    return DiffOperator::partial(vars, m - 1);
}

DiffOperator dpi_basis(const AlgebraPtr& algebra, const std::string& label, double rho) {
    const int idx = algebra->index_of(label);
    if (idx < 0) throw std::invalid_argument("dpi_basis: unknown label " + label);
    if (algebra->family() == "dynin-folland") return dpi_basis_df(idx, rho, algebra->n());
    if (algebra->family() == "heisenberg") return dpi_basis_heisenberg(idx, rho, algebra->n());
    throw std::invalid_argument("dpi_basis: representation table available for the Heisenberg and "
                                "Dynin-Folland families only");
}

PolyExpFunction rep_action(const GroupElement& g, double rho, const PolyExpFunction& f) {
    if (g.chart != Chart::SplitExponential)
        throw std::invalid_argument("rep_action: group element must be in the split-exponential chart");
    if (rho == 0.0) throw std::invalid_argument("degenerate representation: rho must be nonzero");
    const int n = g.algebra->n();
    const int vars = 2 * n + 1;
    if (f.vars != vars) throw std::invalid_argument("rep_action: function arity mismatch");

    auto ypos = [&](int m) { return m; };
    auto xpos = [&](int m) { return 4 * n + 3 - m; };
    const double z = g.coords(0);

    // t . x is affine in t: central coordinate t_{2n+1} picks up the
    // symplectic correction, the rest translate.
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(vars, vars);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(vars);
    for (int m = 1; m <= 2 * n + 1; ++m) b(m - 1) = g.coords(xpos(m));
    for (int j = 1; j <= n; ++j) {
        A(2 * n, j - 1) += 0.5 * g.coords(xpos(n + j));
        A(2 * n, n + j - 1) -= 0.5 * g.coords(xpos(j));
    }

    PolyExpFunction out = f.substitute_affine(A, b);

    Polynomial linear(vars);
    for (int m = 1; m <= 2 * n + 1; ++m) {
        const double ym = g.coords(ypos(m));
        if (ym != 0.0)
            linear += Polynomial::variable(vars, m - 1) * Complex(0.0, kTwoPi * rho * ym);
    }
    out = out.modulate(linear);
    return out.scaled(std::exp(Complex(0.0, kTwoPi * rho * z)));
}

std::vector<PolyExpFunction> test_function_battery(int vars) {
    std::vector<PolyExpFunction> battery;
    battery.push_back(gaussian_monomial(vars, Monomial(vars, 0)));
    Monomial m1(vars, 0);
    m1[0] = 1;
    battery.push_back(gaussian_monomial(vars, m1));
    if (vars > 1) {
        Monomial m2(vars, 0);
        m2[0] = 1;
        m2[vars - 1] = 1;
        battery.push_back(gaussian_monomial(vars, m2, Complex(1.0, 0.5)));
    }
    // modulated Gaussian exp(-|t|^2 + i t_1)
    PolyExpFunction mod = gaussian_monomial(vars, Monomial(vars, 0));
    battery.push_back(mod.modulate(Polynomial::variable(vars, vars - 1) * Complex(0.0, 1.0)));
    return battery;
}

namespace {

std::vector<Eigen::VectorXd> sample_points(int vars, int count, std::uint64_t seed) {
    const CounterRng rng(seed);
    std::vector<Eigen::VectorXd> pts(count, Eigen::VectorXd(vars));
    for (int p = 0; p < count; ++p)
        for (int v = 0; v < vars; ++v) pts[p](v) = rng.uniform(p, v, -2.0, 2.0);
    return pts;
}

double relative_residual(const PolyExpFunction& got, const PolyExpFunction& expected,
                         const std::vector<Eigen::VectorXd>& pts) {
    double worst = 0.0;
    for (const auto& pt : pts) {
        const Complex a = got.eval(pt);
        const Complex b = expected.eval(pt);
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        worst = std::max(worst, std::abs(a - b) / scale);
    }
    return worst;
}

}  // namespace

ResidualReport verify_commutators(const AlgebraPtr& algebra, double rho, int sample_points_count) {
    const int d = algebra->dim();
    const int vars = algebra->family() == "dynin-folland" ? 2 * algebra->n() + 1 : algebra->n();
    const auto battery = test_function_battery(vars);
    const auto pts = sample_points(vars, sample_points_count, 0x5eedULL);

    std::vector<DiffOperator> img;
    img.reserve(d);
    for (int i = 0; i < d; ++i) img.push_back(dpi_basis(algebra, algebra->label(i), rho));

    ResidualReport report;
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            DiffOperator lhs = img[i].compose(img[j]) - img[j].compose(img[i]);
            DiffOperator rhs(vars);
            for (const auto& [k, c] : algebra->bracket_row(i, j))
                rhs = rhs + img[k] * Complex(c.to_double());
            for (const auto& f : battery) {
                const double r = relative_residual(lhs.apply(f), rhs.apply(f), pts);
                if (r > report.max_residual) {
                    report.max_residual = r;
                    report.worst_case = "[" + algebra->label(i) + ", " + algebra->label(j) + "]";
                }
            }
        }
    }
    return report;
}

ResidualReport verify_homomorphism(double rho, int n, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_homomorphism: trials must be >= 1");
    auto algebra = build_dynin_folland(n);
    const int vars = 2 * n + 1;
    const int d = algebra->dim();
    const auto battery = test_function_battery(vars);
    const auto pts = sample_points(vars, 64, seed ^ 0xabcdULL);
    const CounterRng rng(seed);

    ResidualReport report;
    for (int trial = 0; trial < trials; ++trial) {
        Eigen::VectorXd ca(d), cb(d);
        for (int v = 0; v < d; ++v) {
            ca(v) = rng.uniform(2 * trial, v, -1.0, 1.0);
            cb(v) = rng.uniform(2 * trial + 1, v, -1.0, 1.0);
        }
        GroupElement ga(algebra, Chart::SplitExponential, ca);
        GroupElement gb(algebra, Chart::SplitExponential, cb);
        GroupElement gab = df_group_multiply(ga, gb);
        for (const auto& f : battery) {
            PolyExpFunction two_step = rep_action(ga, rho, rep_action(gb, rho, f));
            PolyExpFunction one_step = rep_action(gab, rho, f);
            const double r = relative_residual(two_step, one_step, pts);
            if (r > report.max_residual) {
                report.max_residual = r;
                report.worst_case = "trial " + std::to_string(trial);
            }
        }
    }
    return report;
}

}  // namespace nilspectra

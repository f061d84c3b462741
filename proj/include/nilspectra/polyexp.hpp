#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

namespace nilspectra {

using Complex = std::complex<double>;
using Monomial = std::vector<int>;  // exponent per variable

/// Sparse multivariate polynomial with complex coefficients.
class Polynomial {
public:
    explicit Polynomial(int vars = 0) : vars_(vars) {}
    static Polynomial constant(int vars, Complex c);
    static Polynomial variable(int vars, int index);

    int vars() const { return vars_; }
    const std::map<Monomial, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    Complex coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, Complex c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Complex s) const;
    Polynomial& operator+=(const Polynomial& o);

    Polynomial derivative(int var) const;

    /// Composition with the affine map t -> A t + b.
    Polynomial substitute_affine(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) const;

    Complex eval(const Eigen::VectorXd& point) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int vars_;
    std::map<Monomial, Complex> terms_;
};

/// Function P(t) * exp(E(t)) with polynomial P and an exponent polynomial E
/// of total degree <= 2 whose real quadratic part is negative definite; the
/// class is closed under differentiation, polynomial multiplication, affine
/// substitution and exp(linear) modulation.
struct PolyExpFunction {
    int vars = 0;
    Polynomial poly;
    Polynomial expo;

    PolyExpFunction() : poly(0), expo(0) {}
    PolyExpFunction(Polynomial p, Polynomial e);

    Complex eval(const Eigen::VectorXd& point) const;
    PolyExpFunction scaled(Complex s) const { return PolyExpFunction(poly * s, expo); }

    /// d/dt_var of P e^E = (dP + P dE) e^E.
    PolyExpFunction derivative(int var) const;

    PolyExpFunction substitute_affine(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) const;

    /// Multiply by exp(L) with linear polynomial L (adds to the exponent).
    PolyExpFunction modulate(const Polynomial& linear) const;
};

/// Standard Gaussian test function exp(-|t|^2) times an optional monomial.
PolyExpFunction gaussian_monomial(int vars, const Monomial& m, Complex coeff = 1.0);

}  // namespace nilspectra

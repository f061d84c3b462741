#include "nilspectra/polyexp.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nilspectra {

Polynomial Polynomial::constant(int vars, Complex c) {
    Polynomial p(vars);
    p.add_term(Monomial(vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int vars, int index) {
    Polynomial p(vars);
    Monomial m(vars, 0);
    m.at(index) = 1;
    p.add_term(m, 1.0);
    return p;
}

int Polynomial::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (int e : m) d += e;
        if (d > deg) deg = d;
    }
    return deg;
}

Complex Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Complex(0.0) : it->second;
}

void Polynomial::add_term(const Monomial& m, Complex c) {
    if (static_cast<int>(m.size()) != vars_)
        throw std::invalid_argument("polynomial: monomial arity mismatch");
    if (c == Complex(0.0)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex(0.0)) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial: variable count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial: variable count mismatch");
    Polynomial r(vars_);
    Monomial sum(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            for (int v = 0; v < vars_; ++v) sum[v] = ma[v] + mb[v];
            r.add_term(sum, ca * cb);
        }
    return r;
}

Polynomial Polynomial::operator*(Complex s) const {
    Polynomial r(vars_);
    if (s == Complex(0.0)) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * static_cast<double>(m[var]));
    }
    return r;
}

Polynomial Polynomial::substitute_affine(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) const {
    if (A.rows() != vars_ || A.cols() != vars_ || b.size() != vars_)
        throw std::invalid_argument("polynomial: affine map shape mismatch");
    // image of each variable
    std::vector<Polynomial> image;
    image.reserve(vars_);
    for (int v = 0; v < vars_; ++v) {
        Polynomial iv = Polynomial::constant(vars_, b(v));
        for (int w = 0; w < vars_; ++w)
            if (A(v, w) != 0.0) iv += Polynomial::variable(vars_, w) * Complex(A(v, w));
        image.push_back(std::move(iv));
    }
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(vars_, c);
        for (int v = 0; v < vars_; ++v)
            for (int e = 0; e < m[v]; ++e) t = t * image[v];
        r += t;
    }
    return r;
}

Complex Polynomial::eval(const Eigen::VectorXd& point) const {
    Complex acc = 0.0;
    for (const auto& [m, c] : terms_) {
        Complex v = c;
        for (int k = 0; k < vars_; ++k)
            for (int e = 0; e < m[k]; ++e) v *= point(k);
        acc += v;
    }
    return acc;
}

std::string Polynomial::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.real();
        if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
        os << ")";
        for (int v = 0; v < vars_; ++v) {
            if (m[v] == 0) continue;
            os << "*";
            if (v < static_cast<int>(var_names.size()))
                os << var_names[v];
            else
                os << "t" << (v + 1);
            if (m[v] > 1) os << "^" << m[v];
        }
    }
    return os.str();
}

PolyExpFunction::PolyExpFunction(Polynomial p, Polynomial e)
    : vars(p.vars()), poly(std::move(p)), expo(std::move(e)) {
    if (expo.vars() != vars) throw std::invalid_argument("polyexp: variable count mismatch");
    if (expo.total_degree() > 2)
        throw std::invalid_argument("polyexp: exponent degree must be <= 2");
    // Negative-definite real quadratic part keeps the class inside Schwartz space.
    Eigen::MatrixXd quad = Eigen::MatrixXd::Zero(vars, vars);
    for (const auto& [m, c] : expo.terms()) {
        int d = 0;
        for (int v = 0; v < vars; ++v) d += m[v];
        if (d != 2) continue;
        int a = -1, b = -1;
        for (int v = 0; v < vars; ++v) {
            if (m[v] == 2) { a = b = v; break; }
            if (m[v] == 1) (a < 0 ? a : b) = v;
        }
        if (a == b) {
            quad(a, a) += c.real();
        } else {
            quad(a, b) += 0.5 * c.real();
            quad(b, a) += 0.5 * c.real();
        }
    }
    if (vars > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(quad, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().maxCoeff() >= 0.0)
            throw std::invalid_argument("polyexp: exponent quadratic part must be negative definite");
    }
}

Complex PolyExpFunction::eval(const Eigen::VectorXd& point) const {
    return poly.eval(point) * std::exp(expo.eval(point));
}

PolyExpFunction PolyExpFunction::derivative(int var) const {
    return PolyExpFunction(poly.derivative(var) + poly * expo.derivative(var), expo);
}

PolyExpFunction PolyExpFunction::substitute_affine(const Eigen::MatrixXd& A,
                                                   const Eigen::VectorXd& b) const {
    return PolyExpFunction(poly.substitute_affine(A, b), expo.substitute_affine(A, b));
}

PolyExpFunction PolyExpFunction::modulate(const Polynomial& linear) const {
    if (linear.total_degree() > 1)
        throw std::invalid_argument("polyexp: modulation exponent must be linear");
    return PolyExpFunction(poly, expo + linear);
}

PolyExpFunction gaussian_monomial(int vars, const Monomial& m, Complex coeff) {
    Polynomial p(vars);
    p.add_term(m, coeff);
    Polynomial e(vars);
    for (int v = 0; v < vars; ++v) {
        Monomial sq(vars, 0);
        sq[v] = 2;
        e.add_term(sq, -1.0);
    }
    return PolyExpFunction(std::move(p), std::move(e));
}

}  // namespace nilspectra

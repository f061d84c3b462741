#include "nilspectra/diffop.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace nilspectra {

DiffOperator DiffOperator::identity(int vars) {
    DiffOperator op(vars);
    op.add_term(Monomial(vars, 0), Polynomial::constant(vars, 1.0));
    return op;
}

DiffOperator DiffOperator::multiplication(Polynomial p) {
    DiffOperator op(p.vars());
    op.add_term(Monomial(p.vars(), 0), p);
    return op;
}

DiffOperator DiffOperator::partial(int vars, int var) {
    DiffOperator op(vars);
    Monomial alpha(vars, 0);
    alpha.at(var) = 1;
    op.add_term(alpha, Polynomial::constant(vars, 1.0));
    return op;
}

void DiffOperator::add_term(const Monomial& alpha, const Polynomial& p) {
    if (static_cast<int>(alpha.size()) != vars_ || p.vars() != vars_)
        throw std::invalid_argument("diff operator: arity mismatch");
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial DiffOperator::coefficient(const Monomial& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Polynomial(vars_) : it->second;
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("diff operator: variable count mismatch");
    DiffOperator r = *this;
    for (const auto& [a, p] : o.terms_) r.add_term(a, p);
    return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
    return *this + o * Complex(-1.0);
}

DiffOperator DiffOperator::operator*(Complex s) const {
    DiffOperator r(vars_);
    if (s == Complex(0.0)) return r;
    for (const auto& [a, p] : terms_) r.add_term(a, p * s);
    return r;
}

namespace {

// Iterate all gamma <= alpha componentwise; callback(gamma, multinomial(alpha, gamma)).
void leibniz_split(const Monomial& alpha, const std::function<void(const Monomial&, double)>& cb) {
    const int vars = static_cast<int>(alpha.size());
    Monomial gamma(vars, 0);
    auto binom = [](int n, int k) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    while (true) {
        double coeff = 1.0;
        for (int v = 0; v < vars; ++v) coeff *= binom(alpha[v], gamma[v]);
        cb(gamma, coeff);
        int pos = vars - 1;
        while (pos >= 0 && gamma[pos] == alpha[pos]) gamma[pos--] = 0;
        if (pos < 0) break;
        ++gamma[pos];
    }
}

}  // namespace

DiffOperator DiffOperator::compose(const DiffOperator& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("diff operator: variable count mismatch");
    DiffOperator r(vars_);
    for (const auto& [alpha, p] : terms_) {
        for (const auto& [beta, q] : o.terms_) {
            // p d^alpha (q d^beta) = p sum_{gamma<=alpha} C(alpha,gamma) d^{alpha-gamma}(q) d^{gamma+beta}
            leibniz_split(alpha, [&](const Monomial& gamma, double coeff) {
                Polynomial dq = q;
                for (int v = 0; v < vars_ && !dq.is_zero(); ++v)
                    for (int e = 0; e < alpha[v] - gamma[v]; ++e) dq = dq.derivative(v);
                if (dq.is_zero()) return;
                Monomial out(vars_);
                for (int v = 0; v < vars_; ++v) out[v] = gamma[v] + beta[v];
                r.add_term(out, p * dq * Complex(coeff));
            });
        }
    }
    return r;
}

DiffOperator DiffOperator::power(int k) const {
    if (k < 0) throw std::invalid_argument("diff operator: negative power");
    DiffOperator r = DiffOperator::identity(vars_);
    for (int i = 0; i < k; ++i) r = r.compose(*this);
    return r;
}

PolyExpFunction DiffOperator::apply(const PolyExpFunction& f) const {
    if (vars_ != f.vars) throw std::invalid_argument("diff operator: function arity mismatch");
    Polynomial acc(vars_);
    for (const auto& [alpha, p] : terms_) {
        PolyExpFunction df = f;
        for (int v = 0; v < vars_; ++v)
            for (int e = 0; e < alpha[v]; ++e) df = df.derivative(v);
        acc += p * df.poly;
    }
    return PolyExpFunction(std::move(acc), f.expo);
}

DiffOperator DiffOperator::formal_adjoint() const {
    DiffOperator r(vars_);
    for (const auto& [alpha, p] : terms_) {
        int order = 0;
        for (int v = 0; v < vars_; ++v) order += alpha[v];
        // conjugate coefficients, then expand d^alpha (pbar .)
        Polynomial pbar(vars_);
        for (const auto& [m, c] : p.terms()) pbar.add_term(m, std::conj(c));
        const double sgn = (order % 2 == 0) ? 1.0 : -1.0;
        leibniz_split(alpha, [&](const Monomial& gamma, double coeff) {
            Polynomial dp = pbar;
            for (int v = 0; v < vars_ && !dp.is_zero(); ++v)
                for (int e = 0; e < alpha[v] - gamma[v]; ++e) dp = dp.derivative(v);
            if (dp.is_zero()) return;
            r.add_term(gamma, dp * Complex(sgn * coeff));
        });
    }
    return r;
}

bool DiffOperator::is_real_symmetric(double tol) const {
    for (const auto& [alpha, p] : terms_)
        for (const auto& [m, c] : p.terms())
            if (std::abs(c.imag()) > tol) return false;
    DiffOperator diff = *this - formal_adjoint();
    for (const auto& [alpha, p] : diff.terms_)
        for (const auto& [m, c] : p.terms())
            if (std::abs(c) > tol) return false;
    return true;
}

std::string DiffOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, p] : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << "[" << p.str() << "]";
        for (int v = 0; v < vars_; ++v) {
            if (alpha[v] == 0) continue;
            os << " d" << (v + 1);
            if (alpha[v] > 1) os << "^" << alpha[v];
        }
    }
    return os.str();
}

}  // namespace nilspectra

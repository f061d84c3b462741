#pragma once

#include <map>
#include <string>

#include "nilspectra/polyexp.hpp"

namespace nilspectra {

/// Differential operator sum_alpha p_alpha(t) d^alpha with polynomial
/// coefficients, kept in canonical form (terms merged by derivative
/// multi-index, zero coefficients dropped).
class DiffOperator {
public:
    explicit DiffOperator(int vars = 0) : vars_(vars) {}

    static DiffOperator identity(int vars);
    static DiffOperator multiplication(Polynomial p);
    static DiffOperator partial(int vars, int var);

    int vars() const { return vars_; }
    const std::map<Monomial, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& alpha, const Polynomial& p);
    Polynomial coefficient(const Monomial& alpha) const;

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    DiffOperator operator*(Complex s) const;

    /// Operator composition (this after o), expanded by the Leibniz rule.
    DiffOperator compose(const DiffOperator& o) const;
    DiffOperator power(int k) const;

    PolyExpFunction apply(const PolyExpFunction& f) const;

    /// Formal adjoint on L^2: (p d^alpha)^* = (-1)^|alpha| d^alpha (p .).
    DiffOperator formal_adjoint() const;

    /// The operator is formally symmetric with purely real coefficients.
    bool is_real_symmetric(double tol = 0.0) const;

    bool operator==(const DiffOperator& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    std::string str() const;

private:
    int vars_;
    std::map<Monomial, Polynomial> terms_;
};

}  // namespace nilspectra

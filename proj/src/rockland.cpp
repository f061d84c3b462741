#include "nilspectra/rockland.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "nilspectra/representations.hpp"

namespace nilspectra {

RocklandValidation validate_rockland_classical(const RocklandForm& form,
                                               const DilationFamily& D) {
    if (form.algebra.get() != D.algebra.get() && !form.algebra->same_as(*D.algebra))
        throw std::invalid_argument("incompatible operands: form vs dilation family");
    if (form.terms.empty()) throw std::invalid_argument("rockland form: no terms");

    for (const auto& t : form.terms) {
        if (t.coeff <= 0.0) throw std::invalid_argument("rockland form: coefficients must be > 0");
        if (t.sign != 1 && t.sign != -1)
            throw std::invalid_argument("rockland form: sign must be +1 or -1");
        if (t.power < 2 || t.power % 2 != 0)
            throw std::invalid_argument("rockland form: powers must be positive and even");
        if (t.basis_index < 0 || t.basis_index >= form.algebra->dim())
            throw std::invalid_argument("rockland form: basis index out of range");
    }

    const auto degree = [&](const RocklandForm::Term& t) {
        return t.power * D.weights[t.basis_index];
    };
    const std::int64_t nu = degree(form.terms.front());
    for (const auto& t : form.terms)
        if (degree(t) != nu)
            throw std::domain_error(
                "not homogeneous: terms " + form.algebra->label(form.terms.front().basis_index) +
                "^" + std::to_string(form.terms.front().power) + " (degree " + std::to_string(nu) +
                ") and " + form.algebra->label(t.basis_index) + "^" + std::to_string(t.power) +
                " (degree " + std::to_string(degree(t)) + ") differ");

    RocklandValidation v;
    v.nu = nu;
    v.nu0 = nu / 2;

    // Classical pattern: sign (-1)^{nu0/theta_j} = (-1)^{power/2}, indices
    // covering the whole basis or exactly the first stratum, one term each.
    std::set<int> indices;
    bool signs_ok = true;
    for (const auto& t : form.terms) {
        if (!indices.insert(t.basis_index).second) {
            v.detail = "repeated basis vector";
            return v;
        }
        const int expected = (t.power / 2) % 2 == 0 ? 1 : -1;
        if (t.sign != expected) signs_ok = false;
    }
    std::set<int> whole, stratum1;
    for (int i = 0; i < form.algebra->dim(); ++i) {
        whole.insert(i);
        if (form.algebra->stratum(i) == 1) stratum1.insert(i);
    }
    if (!signs_ok) {
        v.detail = "sign pattern differs from (-1)^{nu0/theta_j}";
    } else if (indices == whole) {
        v.status = RocklandStatus::VerifiedClassical;
        v.detail = "classical sum of powers over the whole basis";
    } else if (indices == stratum1) {
        v.status = RocklandStatus::VerifiedClassical;
        v.detail = "classical sum of powers over the first stratum";
    } else {
        v.detail = "index set is neither the whole basis nor the first stratum";
    }
    return v;
}

DiffOperator assemble_operator(const RocklandForm& form, double rho, std::int64_t max_power) {
    const auto& family = form.algebra->family();
    if (family != "dynin-folland" && family != "heisenberg")
        throw std::invalid_argument("assemble_operator: no representation table for family '" +
                                    family + "'");
    const int n = form.algebra->n();
    const int vars = family == "dynin-folland" ? 2 * n + 1 : n;
    DiffOperator out(vars);
    for (const auto& t : form.terms) {
        if (t.power > max_power)
            throw std::invalid_argument("assemble_operator: power " + std::to_string(t.power) +
                                        " exceeds the symbolic expansion cap (" +
                                        std::to_string(max_power) + ")");
        DiffOperator base = dpi_basis(form.algebra, form.algebra->label(t.basis_index), rho);
        out = out + base.power(static_cast<int>(t.power)) * Complex(t.sign * t.coeff);
    }
    return out;
}

RocklandForm sublaplacian_form_df(int n) {
    RocklandForm form;
    form.algebra = build_dynin_folland(n);
    for (int i = 0; i < form.algebra->dim(); ++i)
        if (form.algebra->stratum(i) == 1) form.terms.push_back({1.0, -1, i, 2});
    return form;
}

RocklandForm sum_of_squares_form_heisenberg(int n) {
    RocklandForm form;
    form.algebra = build_heisenberg(n);
    for (int i = 0; i < form.algebra->dim(); ++i)
        if (form.algebra->stratum(i) == 1) form.terms.push_back({1.0, -1, i, 2});
    return form;
}

RocklandForm anharmonic_r_form(int theta1, int theta2) {
    if (theta1 < 1 || theta2 < 1)
        throw std::invalid_argument("anharmonic_r_form: weights must be positive integers");
    RocklandForm form;
    form.algebra = build_heisenberg(1);
    form.terms.push_back(
        {1.0, theta2 % 2 == 0 ? 1 : -1, form.algebra->index_of("X_1"), 2 * theta2});
    form.terms.push_back(
        {1.0, theta1 % 2 == 0 ? 1 : -1, form.algebra->index_of("X_2"), 2 * theta1});
    return form;
}

RocklandForm classical_form(const DilationFamily& D, std::int64_t nu0,
                            const std::vector<double>& coeffs, bool first_stratum_only) {
    RocklandForm form;
    form.algebra = D.algebra;
    std::size_t c = 0;
    for (int i = 0; i < form.algebra->dim(); ++i) {
        if (first_stratum_only && form.algebra->stratum(i) != 1) continue;
        const std::int64_t theta = D.weights[i];
        if (nu0 % theta != 0)
            throw std::invalid_argument("classical_form: nu0 must be divisible by every weight");
        const std::int64_t ratio = nu0 / theta;
        const double coeff = c < coeffs.size() ? coeffs[c] : 1.0;
        ++c;
        form.terms.push_back({coeff, ratio % 2 == 0 ? 1 : -1, i, 2 * ratio});
    }
    return form;
}

RocklandForm form_from_json(const AlgebraPtr& algebra, const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    RocklandForm form;
    form.algebra = algebra;
    for (const auto& t : doc.at("terms")) {
        RocklandForm::Term term;
        term.coeff = t.at("coeff").get<double>();
        term.sign = t.at("sign").get<int>();
        term.power = t.at("power").get<std::int64_t>();
        const auto& basis = t.at("basis");
        if (basis.is_string()) {
            term.basis_index = algebra->index_of(basis.get<std::string>());
            if (term.basis_index < 0)
                throw std::invalid_argument("form json: unknown basis label " +
                                            basis.get<std::string>());
        } else {
            term.basis_index = basis.get<int>() - 1;
        }
        form.terms.push_back(term);
    }
    return form;
}

}  // namespace nilspectra

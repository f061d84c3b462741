#include "nilspectra/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace nilspectra {

namespace {

void add_bracket(std::map<std::pair<int, int>, GradedLieAlgebra::BracketRow>& table, int i, int j,
                 int k, Rational c) {
    if (i == j) throw std::invalid_argument("bracket table: [e_i, e_i] must vanish");
    if (j < i) { std::swap(i, j); c = -c; }
    auto& row = table[{i, j}];
    for (auto& [tk, tc] : row) {
        if (tk == k) { tc += c; return; }
    }
    row.emplace_back(k, c);
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(std::string family, int n, std::vector<std::string> labels,
                                   std::vector<int> strata, int step,
                                   std::map<std::pair<int, int>, BracketRow> brackets)
    : family_(std::move(family)), n_(n), labels_(std::move(labels)), strata_(std::move(strata)),
      step_(step), brackets_(std::move(brackets)) {
    const int d = dim();
    if (d <= 0) throw std::invalid_argument("algebra: empty basis");
    if (static_cast<int>(strata_.size()) != d)
        throw std::invalid_argument("algebra: strata length != dim");
    for (int s : strata_)
        if (s < 1) throw std::invalid_argument("algebra: stratum numbers must be >= 1");
    if (step_ < 1) throw std::invalid_argument("algebra: step must be >= 1");
    for (auto& [ij, row] : brackets_) {
        auto [i, j] = ij;
        if (i < 0 || j >= d || i >= j)
            throw std::invalid_argument("algebra: bracket indices out of range");
        std::erase_if(row, [](const auto& t) { return t.second.is_zero(); });
        for (auto& [k, c] : row)
            if (k < 0 || k >= d) throw std::invalid_argument("algebra: bracket target out of range");
    }
    std::erase_if(brackets_, [](const auto& e) { return e.second.empty(); });
}

int GradedLieAlgebra::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Rational GradedLieAlgebra::structure_constant(int i, int j, int k) const {
    if (i == j) return Rational(0);
    const bool flip = j < i;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return Rational(0);
    for (const auto& [tk, tc] : it->second)
        if (tk == k) return flip ? -tc : tc;
    return Rational(0);
}

GradedLieAlgebra::BracketRow GradedLieAlgebra::bracket_row(int i, int j) const {
    BracketRow out;
    if (i == j) return out;
    const bool flip = j < i;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return out;
    out = it->second;
    if (flip)
        for (auto& [k, c] : out) c = -c;
    return out;
}

std::vector<int> GradedLieAlgebra::center_indices() const {
    std::vector<int> out;
    for (int m = 0; m < dim(); ++m) {
        bool central = true;
        for (int i = 0; i < dim() && central; ++i)
            if (!bracket_row(m, i).empty()) central = false;
        if (central) out.push_back(m);
    }
    return out;
}

std::optional<std::tuple<int, int, int>> GradedLieAlgebra::gradation_violation() const {
    for (const auto& [ij, row] : brackets_) {
        auto [i, j] = ij;
        for (const auto& [k, c] : row)
            if (strata_[k] != strata_[i] + strata_[j]) return std::make_tuple(i, j, k);
    }
    return std::nullopt;
}

bool GradedLieAlgebra::same_as(const GradedLieAlgebra& other) const {
    return labels_ == other.labels_ && strata_ == other.strata_ && step_ == other.step_ &&
           brackets_ == other.brackets_;
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, Eigen::VectorXd c)
    : algebra(std::move(alg)), coeffs(std::move(c)) {
    if (coeffs.size() != algebra->dim())
        throw std::invalid_argument("element: coordinate length != algebra dimension");
}

AlgebraElement AlgebraElement::basis(AlgebraPtr alg, int index) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(alg->dim());
    c(index) = 1.0;
    return AlgebraElement(std::move(alg), std::move(c));
}

AlgebraElement AlgebraElement::zero(AlgebraPtr alg) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(alg->dim());
    return AlgebraElement(std::move(alg), std::move(c));
}

static void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra.get() != b.algebra.get() && !a.algebra->same_as(*b.algebra))
        throw std::invalid_argument("incompatible operands: elements of different algebras");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    return AlgebraElement(a.algebra, a.coeffs + b.coeffs);
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    return AlgebraElement(a.algebra, a.coeffs - b.coeffs);
}

AlgebraElement operator*(double s, const AlgebraElement& a) {
    return AlgebraElement(a.algebra, s * a.coeffs);
}

AlgebraPtr build_heisenberg(int n) {
    if (n < 1) throw std::invalid_argument("build_heisenberg: n must be >= 1");
    const int d = 2 * n + 1;
    std::vector<std::string> labels(d);
    std::vector<int> strata(d);
    auto pos = [&](int m) { return 2 * n + 1 - m; };  // X_m at this position
    for (int m = 1; m <= d; ++m) {
        labels[pos(m)] = "X_" + std::to_string(m);
        strata[pos(m)] = (m == 2 * n + 1) ? 2 : 1;
    }
    std::map<std::pair<int, int>, GradedLieAlgebra::BracketRow> table;
    for (int j = 1; j <= n; ++j)
        add_bracket(table, pos(j), pos(n + j), pos(2 * n + 1), Rational(1));
    return std::make_shared<GradedLieAlgebra>("heisenberg", n, std::move(labels),
                                              std::move(strata), 2, std::move(table));
}

AlgebraPtr build_dynin_folland(int n) {
    if (n < 1) throw std::invalid_argument("build_dynin_folland: n must be >= 1");
    const int d = 4 * n + 3;
    std::vector<std::string> labels(d);
    std::vector<int> strata(d);
    auto posY = [&](int m) { return m; };
    auto posX = [&](int m) { return 4 * n + 3 - m; };
    labels[0] = "Z";
    strata[0] = 3;
    for (int m = 1; m <= 2 * n + 1; ++m) {
        labels[posY(m)] = "Y_" + std::to_string(m);
        strata[posY(m)] = (m == 2 * n + 1) ? 1 : 2;
        labels[posX(m)] = "X_" + std::to_string(m);
        strata[posX(m)] = (m == 2 * n + 1) ? 2 : 1;
    }
    std::map<std::pair<int, int>, GradedLieAlgebra::BracketRow> table;
    const Rational half(1, 2);
    for (int j = 1; j <= n; ++j) {
        add_bracket(table, posX(j), posY(j), 0, Rational(1));            // [X_j, Y_j] = Z
        add_bracket(table, posX(n + j), posY(n + j), 0, Rational(1));    // [X_{n+j}, Y_{n+j}] = Z
        add_bracket(table, posX(j), posX(n + j), posX(2 * n + 1), Rational(1));
        add_bracket(table, posX(j), posY(2 * n + 1), posY(n + j), -half);
        add_bracket(table, posX(n + j), posY(2 * n + 1), posY(j), half);
    }
    add_bracket(table, posX(2 * n + 1), posY(2 * n + 1), 0, Rational(1));
    return std::make_shared<GradedLieAlgebra>("dynin-folland", n, std::move(labels),
                                              std::move(strata), 3, std::move(table));
}

AlgebraPtr build_engel() {
    std::vector<std::string> labels = {"X_1", "X_2", "X_3", "X_4"};
    std::vector<int> strata = {1, 1, 2, 3};
    std::map<std::pair<int, int>, GradedLieAlgebra::BracketRow> table;
    add_bracket(table, 0, 1, 2, Rational(1));  // [X_1, X_2] = X_3
    add_bracket(table, 0, 2, 3, Rational(1));  // [X_1, X_3] = X_4
    return std::make_shared<GradedLieAlgebra>("engel", 0, std::move(labels), std::move(strata), 3,
                                              std::move(table));
}

AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a, b);
    const auto& alg = *a.algebra;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(alg.dim());
    for (const auto& [ij, row] : alg.stored_brackets()) {
        auto [i, j] = ij;
        const double w = a.coeffs(i) * b.coeffs(j) - a.coeffs(j) * b.coeffs(i);
        if (w == 0.0) continue;
        for (const auto& [k, c] : row) out(k) += w * c.to_double();
    }
    return AlgebraElement(a.algebra, std::move(out));
}

Rational jacobi_residual(const GradedLieAlgebra& algebra) {
    const int d = algebra.dim();
    Rational worst(0);
    std::vector<Rational> res(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::fill(res.begin(), res.end(), Rational(0));
                // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                auto accumulate = [&](int a, int b, int c) {
                    for (const auto& [l, cl] : algebra.bracket_row(a, b))
                        for (const auto& [m, cm] : algebra.bracket_row(l, c))
                            res[m] += cl * cm;
                };
                accumulate(i, j, k);
                accumulate(j, k, i);
                accumulate(k, i, j);
                for (const auto& r : res) {
                    Rational mag = r.abs();
                    if (worst < mag) worst = mag;
                }
            }
    return worst;
}

std::string algebra_to_json(const GradedLieAlgebra& algebra) {
    nlohmann::json doc;
    doc["dim"] = algebra.dim();
    doc["labels"] = algebra.labels();
    doc["step"] = algebra.step();
    doc["strata"] = algebra.strata();
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& [ij, row] : algebra.stored_brackets())
        for (const auto& [k, c] : row)
            brackets.push_back({{"i", ij.first + 1},
                                {"j", ij.second + 1},
                                {"k", k + 1},
                                {"num", c.num()},
                                {"den", c.den()}});
    doc["brackets"] = std::move(brackets);
    return doc.dump(2);
}

AlgebraPtr algebra_from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    const int d = doc.at("dim").get<int>();
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    auto strata = doc.at("strata").get<std::vector<int>>();
    const int step = doc.at("step").get<int>();
    if (static_cast<int>(labels.size()) != d)
        throw std::invalid_argument("algebra json: labels length != dim");
    std::map<std::pair<int, int>, GradedLieAlgebra::BracketRow> table;
    for (const auto& b : doc.at("brackets")) {
        const int i = b.at("i").get<int>() - 1;
        const int j = b.at("j").get<int>() - 1;
        const int k = b.at("k").get<int>() - 1;
        add_bracket(table, i, j, k,
                    Rational(b.at("num").get<std::int64_t>(), b.at("den").get<std::int64_t>()));
    }
    return std::make_shared<GradedLieAlgebra>("custom", 0, std::move(labels), std::move(strata),
                                              step, std::move(table));
}

}  // namespace nilspectra

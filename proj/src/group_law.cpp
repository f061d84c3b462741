#include "nilspectra/group_law.hpp"

#include <stdexcept>

namespace nilspectra {

GroupElement::GroupElement(AlgebraPtr alg, Chart ch, Eigen::VectorXd c)
    : algebra(std::move(alg)), chart(ch), coords(std::move(c)) {
    if (coords.size() != algebra->dim())
        throw std::invalid_argument("group element: coordinate length != algebra dimension");
    if (chart == Chart::SplitExponential && algebra->family() != "dynin-folland")
        throw std::invalid_argument(
            "invalid chart: split-exponential coordinates exist only for the Dynin-Folland family");
}

GroupElement GroupElement::identity(AlgebraPtr alg, Chart ch) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(alg->dim());
    return GroupElement(std::move(alg), ch, std::move(c));
}

AlgebraElement bch_multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.algebra->step() > 3)
        throw std::invalid_argument("unsupported step: BCH truncation covers step <= 3 only");
    AlgebraElement ab = bracket(a, b);
    AlgebraElement aab = bracket(a, ab);
    AlgebraElement bba = bracket(b, bracket(b, a));
    return a + b + 0.5 * ab + (1.0 / 12.0) * (aab + bba);
}

namespace {

void require_chart(const GroupElement& g, Chart ch, const std::string& family) {
    if (g.chart != ch) throw std::invalid_argument("invalid chart for this group law");
    if (g.algebra->family() != family)
        throw std::invalid_argument("group law does not apply to algebra family '" +
                                    g.algebra->family() + "'");
}

}  // namespace

GroupElement heisenberg_multiply(const GroupElement& g, const GroupElement& h) {
    require_chart(g, Chart::Exponential, "heisenberg");
    require_chart(h, Chart::Exponential, "heisenberg");
    if (g.algebra->n() != h.algebra->n())
        throw std::invalid_argument("incompatible operands: different Heisenberg groups");
    const int n = g.algebra->n();
    // position of X_m is 2n+1-m
    auto x = [&](const Eigen::VectorXd& c, int m) -> double { return c(2 * n + 1 - m); };
    Eigen::VectorXd out = g.coords + h.coords;
    double central = 0.0;
    for (int j = 1; j <= n; ++j)
        central += x(g.coords, j) * x(h.coords, n + j) - x(h.coords, j) * x(g.coords, n + j);
    out(0) += 0.5 * central;
    return GroupElement(g.algebra, Chart::Exponential, std::move(out));
}

namespace {

// Split-exponential coordinate accessors: coords = (z, y_1..y_{2n+1}, x_{2n+1}..x_1).
struct SplitView {
    int n;
    static int zpos() { return 0; }
    int ypos(int m) const { return m; }
    int xpos(int m) const { return 4 * n + 3 - m; }
};

}  // namespace

GroupElement df_group_multiply(const GroupElement& g, const GroupElement& h) {
    require_chart(g, Chart::SplitExponential, "dynin-folland");
    require_chart(h, Chart::SplitExponential, "dynin-folland");
    if (g.algebra->n() != h.algebra->n())
        throw std::invalid_argument("incompatible operands: different Dynin-Folland groups");
    const SplitView v{g.algebra->n()};
    const int n = v.n;
    const auto& a = g.coords;
    const auto& b = h.coords;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(a.size());

    double xy = 0.0;  // <x, y'> pairs coordinates by subscript
    for (int m = 1; m <= 2 * n + 1; ++m) xy += a(v.xpos(m)) * b(v.ypos(m));
    out(v.zpos()) = a(v.zpos()) + b(v.zpos()) + xy;

    const double ytop = b(v.ypos(2 * n + 1));
    for (int j = 1; j <= n; ++j) {
        out(v.ypos(j)) = a(v.ypos(j)) + b(v.ypos(j)) + 0.5 * ytop * a(v.xpos(n + j));
        out(v.ypos(n + j)) = a(v.ypos(n + j)) + b(v.ypos(n + j)) - 0.5 * ytop * a(v.xpos(j));
    }
    out(v.ypos(2 * n + 1)) = a(v.ypos(2 * n + 1)) + ytop;

    double central = 0.0;
    for (int j = 1; j <= n; ++j)
        central += a(v.xpos(j)) * b(v.xpos(n + j)) - b(v.xpos(j)) * a(v.xpos(n + j));
    out(v.xpos(2 * n + 1)) = a(v.xpos(2 * n + 1)) + b(v.xpos(2 * n + 1)) + 0.5 * central;
    for (int m = 1; m <= 2 * n; ++m) out(v.xpos(m)) = a(v.xpos(m)) + b(v.xpos(m));

    return GroupElement(g.algebra, Chart::SplitExponential, std::move(out));
}

GroupElement df_group_inverse(const GroupElement& g) {
    require_chart(g, Chart::SplitExponential, "dynin-folland");
    const SplitView v{g.algebra->n()};
    const int n = v.n;
    const auto& a = g.coords;
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(a.size());

    // x* = -x (the x-block is an exponential-coordinate Heisenberg factor)
    for (int m = 1; m <= 2 * n + 1; ++m) inv(v.xpos(m)) = -a(v.xpos(m));

    // Solve y + y* + coad(x) y*/2 = 0; y*_{2n+1} decouples.
    const double ytop = -a(v.ypos(2 * n + 1));
    inv(v.ypos(2 * n + 1)) = ytop;
    for (int j = 1; j <= n; ++j) {
        inv(v.ypos(j)) = -a(v.ypos(j)) - 0.5 * ytop * a(v.xpos(n + j));
        inv(v.ypos(n + j)) = -a(v.ypos(n + j)) + 0.5 * ytop * a(v.xpos(j));
    }

    double xy = 0.0;
    for (int m = 1; m <= 2 * n + 1; ++m) xy += a(v.xpos(m)) * inv(v.ypos(m));
    inv(v.zpos()) = -a(v.zpos()) - xy;
    return GroupElement(g.algebra, Chart::SplitExponential, std::move(inv));
}

}  // namespace nilspectra

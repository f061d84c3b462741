#pragma once

#include "nilspectra/lie_algebra.hpp"

namespace nilspectra {

enum class Chart { Exponential, SplitExponential };

/// Group element in a fixed coordinate chart. Coordinates follow the
/// algebra's basis order; the split-exponential chart (z, y, x) is only
/// defined for the Dynin-Folland family.
struct GroupElement {
    AlgebraPtr algebra;
    Chart chart;
    Eigen::VectorXd coords;

    GroupElement(AlgebraPtr alg, Chart ch, Eigen::VectorXd c);
    static GroupElement identity(AlgebraPtr alg, Chart ch);
};

/// Truncated Baker-Campbell-Hausdorff product, exact for step <= 3:
///   a + b + [a,b]/2 + ([a,[a,b]] + [b,[b,a]])/12.
AlgebraElement bch_multiply(const AlgebraElement& a, const AlgebraElement& b);

/// Explicit Heisenberg group law in exponential coordinates.
GroupElement heisenberg_multiply(const GroupElement& g, const GroupElement& h);

/// Dynin-Folland group law in split-exponential coordinates:
///   (z,y,x)(z',y',x') = (z+z'+<x,y'>, y+y'+coad(x)y'/2, x.x').
GroupElement df_group_multiply(const GroupElement& g, const GroupElement& h);

/// Inverse in the split-exponential chart (closed form).
GroupElement df_group_inverse(const GroupElement& g);

}  // namespace nilspectra

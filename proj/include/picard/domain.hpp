#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "picard/geometry.hpp"

namespace picard {

/// Margins of the fundamental-domain inequalities at a point.
/// prism_margins = (Re z1, Im z1, 1 - Re z1 - Im z1, 1/2 - |Re z2|);
/// q_margins[j-1] = Q_j(z) - tau_j.  in_set iff every margin >= -tol.
struct MembershipReport {
    bool in_set = false;
    std::array<double, 4> prism_margins{};
    std::array<double, 8> q_margins{};

    double min_margin() const;
};

/// Threshold tau_j of the j-th inequality, j in 1..8.
double q_threshold(int j);

/// Q_1 = |z2|^2; Q_{3+r} = |r+i-(1+i)z1+z2|^2 for r = -1,0,1;
/// Q_{5,6} = |r+i-2iz1+2z2|^2 and Q_{7,8} = |r+i-2z1+2z2|^2 for r = -1,1.
double q_value(int j, const PointD2& z);

MembershipReport in_fundamental_domain(const PointD2& z, double tol = kDefaultTol);

/// The superset F1: z1 in the triangle, |Re z2| <= 1/2, |z2| >= 1, height >= L.
bool in_f1(const PointD2& z, double L = kDefaultL, double tol = kDefaultTol);

struct SampleCheckReport {
    bool ok = true;
    int samples = 0;
    std::string counterexample;
};

/// Edge at z1 = 0: points (0, z2) with |Re z2| <= 1/2, Im z2 > 0 belong to the
/// domain exactly when |z2| >= 1.  Samples both sides of the |z2| = 1 circle.
SampleCheckReport check_edge_z1_zero(int samples, std::uint64_t seed = 20260808u);

/// Product structure near infinity: for a >= 1 + 2 sqrt(2) every prism point
/// with Im z2 >= a lies in the domain.
SampleCheckReport check_product_structure(double a, int samples, std::uint64_t seed = 20260808u);

} // namespace picard

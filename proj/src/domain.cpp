#include "picard/domain.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

constexpr ComplexF kI{0.0, 1.0};

std::string point_str(const PointD2& z) {
    std::ostringstream os;
    os.precision(12);
    os << "(" << z.z1.real() << "+" << z.z1.imag() << "i, " << z.z2.real() << "+" << z.z2.imag()
       << "i)";
    return os.str();
}

} // namespace

double MembershipReport::min_margin() const {
    double m = prism_margins[0];
    for (double v : prism_margins) m = std::min(m, v);
    for (double v : q_margins) m = std::min(m, v);
    return m;
}

double q_threshold(int j) {
    if (j < 1 || j > 8) throw std::invalid_argument("q_threshold: index must be in 1..8");
    return j <= 4 ? 1.0 : 2.0;
}

double q_value(int j, const PointD2& z) {
    switch (j) {
    case 1: return std::norm(z.z2);
    case 2:
    case 3:
    case 4: {
        const double r = j - 3;
        return std::norm(ComplexF(r, 1.0) - (1.0 + kI) * z.z1 + z.z2);
    }
    case 5:
    case 6: {
        const double r = 2 * j - 11; // -1, 1
        return std::norm(ComplexF(r, 1.0) - 2.0 * kI * z.z1 + 2.0 * z.z2);
    }
    case 7:
    case 8: {
        const double r = 2 * j - 15; // -1, 1
        return std::norm(ComplexF(r, 1.0) - 2.0 * z.z1 + 2.0 * z.z2);
    }
    default: throw std::invalid_argument("q_value: index must be in 1..8");
    }
}

MembershipReport in_fundamental_domain(const PointD2& z, double tol) {
    MembershipReport rep;
    rep.prism_margins = {z.z1.real(), z.z1.imag(), 1.0 - z.z1.real() - z.z1.imag(),
                         0.5 - std::abs(z.z2.real())};
    for (int j = 1; j <= 8; ++j)
        rep.q_margins[static_cast<std::size_t>(j - 1)] = q_value(j, z) - q_threshold(j);
    rep.in_set = rep.min_margin() >= -tol;
    return rep;
}

bool in_f1(const PointD2& z, double L, double tol) {
    return in_triangle_delta(z.z1, tol) && std::abs(z.z2.real()) <= 0.5 + tol &&
           std::abs(z.z2) >= 1.0 - tol && height(z) >= L - tol;
}

SampleCheckReport check_edge_z1_zero(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(-0.5, 0.5);
    std::uniform_real_distribution<double> uin(0.0, 3.0);
    std::uniform_real_distribution<double> uout(0.2, 0.999);
    SampleCheckReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        const double x2 = ux(rng);
        const double rim = std::sqrt(1.0 - x2 * x2);
        const PointD2 inside(0.0, ComplexF(x2, rim + uin(rng)));
        if (!in_fundamental_domain(inside).in_set) {
            rep.ok = false;
            rep.counterexample = "expected inside: " + point_str(inside);
            return rep;
        }
        const PointD2 outside(0.0, ComplexF(x2, rim * uout(rng)));
        if (in_fundamental_domain(outside).in_set) {
            rep.ok = false;
            rep.counterexample = "expected outside: " + point_str(outside);
            return rep;
        }
    }
    return rep;
}

SampleCheckReport check_product_structure(double a, int samples, std::uint64_t seed) {
    if (a < 1.0 + 2.0 * std::sqrt(2.0) - 1e-12)
        throw std::invalid_argument("check_product_structure: a must be >= 1 + 2 sqrt(2)");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> ux(-0.5, 0.5);
    std::uniform_real_distribution<double> utail(0.0, 5.0);
    SampleCheckReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        double x1 = unit(rng), y1 = unit(rng);
        if (x1 + y1 > 1.0) { x1 = 1.0 - x1; y1 = 1.0 - y1; }
        // a fraction of the samples sit exactly on the face Im z2 = a
        const double y2 = (s % 8 == 0) ? a : a + utail(rng);
        const PointD2 z(ComplexF(x1, y1), ComplexF(ux(rng), y2));
        if (!in_fundamental_domain(z).in_set) {
            rep.ok = false;
            rep.counterexample = "expected inside: " + point_str(z);
            return rep;
        }
    }
    return rep;
}

} // namespace picard

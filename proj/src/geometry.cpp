#include "picard/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace picard {

double max_siegel_l() { return (std::sqrt(3.0) - 1.0) / 2.0; }

namespace {

bool finite(ComplexF v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

} // namespace

PointD2::PointD2(ComplexF z1_, ComplexF z2_, double tol) : z1(z1_), z2(z2_) {
    if (!finite(z1) || !finite(z2))
        throw std::invalid_argument("PointD2: non-finite coordinate");
    if (z2.imag() - 0.5 * std::norm(z1) <= -tol)
        throw std::invalid_argument("PointD2: point lies outside the hyperquadric");
}

PointB2::PointB2(ComplexF w1_, ComplexF w2_, double tol) : w1(w1_), w2(w2_) {
    if (!finite(w1) || !finite(w2))
        throw std::invalid_argument("PointB2: non-finite coordinate");
    if (std::norm(w1) + std::norm(w2) >= 1.0 + tol)
        throw std::invalid_argument("PointB2: point lies outside the unit ball");
}

double height(const PointD2& z) { return z.z2.imag() - 0.5 * std::norm(z.z1); }

PointB2 cayley_to_ball(const PointD2& z) {
    const ComplexF iz2 = ComplexF(0, 1) * z.z2;
    const ComplexF den = iz2 - 1.0;
    if (std::abs(den) < 1e-12)
        throw std::domain_error("cayley_to_ball: singular map (z2 near -i)");
    return {std::sqrt(2.0) * z.z1 / den, (iz2 + 1.0) / den};
}

PointD2 cayley_to_siegel(const PointB2& w) {
    const ComplexF den = w.w2 - 1.0;
    if (std::abs(den) < 1e-12)
        throw std::domain_error("cayley_to_siegel: singular map (w2 near 1)");
    return {std::sqrt(2.0) * w.w1 / den, ComplexF(0, -1) * (w.w2 + 1.0) / den};
}

bool in_triangle_delta(ComplexF z1, double tol) {
    return z1.real() >= -tol && z1.imag() >= -tol && z1.real() + z1.imag() <= 1.0 + tol;
}

bool in_siegel_set(const PointD2& z, double L, double tol) {
    if (!(L > 0.0 && L < max_siegel_l()))
        throw std::invalid_argument("in_siegel_set: L must lie in (0, (sqrt(3)-1)/2)");
    return in_triangle_delta(z.z1, tol) && std::abs(z.z2.real()) <= 0.5 + tol &&
           height(z) >= L - tol;
}

PointD2 random_interior_point(std::mt19937_64& rng, double min_height, double max_height) {
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const ComplexF z1(box(rng), box(rng));
    const double x2 = box(rng);
    const double h =
        std::exp(std::log(min_height) + unit(rng) * (std::log(max_height) - std::log(min_height)));
    return {z1, ComplexF(x2, h + 0.5 * std::norm(z1))};
}

} // namespace picard

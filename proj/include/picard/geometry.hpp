#pragma once

#include <complex>
#include <random>

namespace picard {

using ComplexF = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultL = 0.3;

/// Upper bound of the admissible Siegel parameter range, (sqrt(3)-1)/2.
double max_siegel_l();

/// Point of the hyperquadric model D^2 = { Im z2 > |z1|^2 / 2 }.
/// The validating constructor rejects non-finite values and points whose
/// height falls below -tol.
struct PointD2 {
    ComplexF z1{0.0, 0.0};
    ComplexF z2{0.0, 1.0};

    PointD2() = default;
    PointD2(ComplexF z1_, ComplexF z2_, double tol = kDefaultTol);
};

/// Point of the unit-ball model B^2 = { |w1|^2 + |w2|^2 < 1 }.
struct PointB2 {
    ComplexF w1{0.0, 0.0};
    ComplexF w2{0.0, 0.0};

    PointB2() = default;
    PointB2(ComplexF w1_, ComplexF w2_, double tol = kDefaultTol);
};

/// Cusp-distance function Im z2 - |z1|^2 / 2.
double height(const PointD2& z);

PointB2 cayley_to_ball(const PointD2& z);
PointD2 cayley_to_siegel(const PointB2& w);

/// Closed triangle in C with vertices 0, 1, i (membership up to tol).
bool in_triangle_delta(ComplexF z1, double tol = kDefaultTol);

/// Siegel set S(L): z1 in the triangle, |Re z2| <= 1/2, height >= L.
/// Requires 0 < L < (sqrt(3)-1)/2.
bool in_siegel_set(const PointD2& z, double L = kDefaultL, double tol = kDefaultTol);

/// Random interior point with height log-uniform in [min_height, max_height],
/// z1 and Re z2 uniform in [-2, 2].  For property tests and sample checks.
PointD2 random_interior_point(std::mt19937_64& rng, double min_height = 1e-2,
                              double max_height = 10.0);

} // namespace picard

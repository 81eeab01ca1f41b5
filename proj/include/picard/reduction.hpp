#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "picard/picard_group.hpp"

namespace picard {

/// Outcome of moving a point into the fundamental domain.
/// iterations counts Q-form inversion steps; height_trace holds the height
/// before each inversion plus the final height, strictly increasing.
struct ReductionResult {
    PicardElement g;
    PointD2 reduced;
    int iterations = 0;
    std::vector<double> height_trace;
};

class reduction_error : public std::runtime_error {
public:
    reduction_error(const std::string& what, std::vector<double> trace)
        : std::runtime_error(what), height_trace(std::move(trace)) {}
    std::vector<double> height_trace;
};

/// Stabilizer normalization: returns P in the stabilizer of infinity (exact
/// group element, dilation 1) with P(z) satisfying z1 in the triangle and
/// |Re z2| <= 1/2.  Height is preserved.
std::pair<PicardElement, PointD2> normalize_cusp(const PointD2& z);

/// Alternates cusp normalization with Q-form inversions (the generator with
/// the smallest Q_j/tau_j, ties to the smallest index) until all eight
/// inequalities hold within tol.  Throws reduction_error past max_iter.
ReductionResult reduce(const PointD2& z, double tol = kDefaultTol, int max_iter = 200);

/// Reduces z and h(z); true when both land on the same representative
/// (within 1e-6).  False signals a face-proximal representative, where the
/// orbit meets the boundary and the reduced point is not unique.
bool canonicalize_pair_check(const PointD2& z, const PicardElement& h);

} // namespace picard

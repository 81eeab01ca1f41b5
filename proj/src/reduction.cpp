#include "picard/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "picard/domain.hpp"

namespace picard {

namespace {

constexpr ComplexF kI{0.0, 1.0};

ComplexF unit_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

// Lattice points of (1+i)Z[i] near the target, as gamma = (a-b) + (a+b)i
// with a, b integer.  radius 1 gives the 2x2 rounding block, radius 2 a 4x4.
std::vector<GaussianInt> lattice_candidates(ComplexF target, int radius) {
    const double a = 0.5 * (target.real() + target.imag());
    const double b = 0.5 * (target.imag() - target.real());
    const auto fa = static_cast<std::int64_t>(std::floor(a));
    const auto fb = static_cast<std::int64_t>(std::floor(b));
    std::vector<GaussianInt> out;
    for (std::int64_t da = 1 - radius; da <= radius; ++da)
        for (std::int64_t db = 1 - radius; db <= radius; ++db) {
            const std::int64_t aa = fa + da, bb = fb + db;
            out.push_back(GaussianInt{aa - bb, aa + bb});
        }
    return out;
}

ComplexF to_complex(const GaussianInt& g) {
    return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

} // namespace

std::pair<PicardElement, PointD2> normalize_cusp(const PointD2& z) {
    for (int radius = 1; radius <= 2; ++radius) {
        for (int k = 0; k < 4; ++k) {
            const ComplexF w = unit_power(k) * z.z1;
            auto cands = lattice_candidates(-w, radius);
            std::sort(cands.begin(), cands.end(), [&](const GaussianInt& p, const GaussianInt& q) {
                const double dp = std::norm(w + to_complex(p));
                const double dq = std::norm(w + to_complex(q));
                if (dp != dq) return dp < dq;
                if (norm_sq(p) != norm_sq(q)) return norm_sq(p) < norm_sq(q);
                return std::pair(p.re, p.im) < std::pair(q.re, q.im);
            });
            for (const auto& gamma : cands) {
                const ComplexF z1n = w + to_complex(gamma);
                if (!in_triangle_delta(z1n)) continue;
                // z2 after N_{gamma, i|gamma|^2/2} M_{i^k}, then shift Re z2 by r.
                const ComplexF z2t = z.z2 + kI * (0.5 * static_cast<double>(norm_sq(gamma))) +
                                     kI * w * std::conj(to_complex(gamma));
                const auto r = static_cast<std::int64_t>(std::llround(-z2t.real()));
                const ExactMatrix3 p =
                    heisenberg_exact(gamma, r) * rotation_exact(k);
                return {PicardElement::from_exact(p),
                        PointD2(z1n, z2t + static_cast<double>(r))};
            }
        }
    }
    throw std::logic_error("normalize_cusp: no lattice cell found (tolerance misconfiguration)");
}

ReductionResult reduce(const PointD2& z, double tol, int max_iter) {
    const auto& table = generators();
    PicardElement g = PicardElement::identity_element();
    PointD2 cur = z;
    std::vector<double> trace{height(z)};
    int inversions = 0;

    for (int it = 0; it < max_iter; ++it) {
        auto [p, normalized] = normalize_cusp(cur);
        g = p * g;
        cur = normalized;

        int best = -1;
        double best_ratio = 1.0;
        bool inside = true;
        for (int j = 0; j < 8; ++j) {
            const double tau = table.q_threshold[static_cast<std::size_t>(j)];
            const double q = q_value(j + 1, cur);
            if (q < tau - tol) inside = false;
            const double ratio = q / tau;
            if (ratio < best_ratio) {
                best_ratio = ratio;
                best = j;
            }
        }
        if (inside) return {g, cur, inversions, std::move(trace)};

        const PicardElement& gen = table.g[static_cast<std::size_t>(best)];
        cur = apply(gen.float_cache(), cur);
        g = gen * g;
        ++inversions;
        trace.push_back(height(cur));
    }
    throw reduction_error("reduce: max_iter exceeded", std::move(trace));
}

bool canonicalize_pair_check(const PointD2& z, const PicardElement& h) {
    const ReductionResult a = reduce(z);
    const ReductionResult b = reduce(apply(h.float_cache(), z));
    return std::abs(a.reduced.z1 - b.reduced.z1) <= 1e-6 &&
           std::abs(a.reduced.z2 - b.reduced.z2) <= 1e-6;
}

} // namespace picard

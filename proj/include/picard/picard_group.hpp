#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picard/automorphism.hpp"
#include "picard/gaussian.hpp"
#include "picard/geometry.hpp"

namespace picard {

/// A group element: exact Gaussian-integer matrix plus its float mirror.
/// Construction requires exact C-unitarity; the determinant (necessarily a
/// unit) is normalized to 1 by scaling with itself, which also makes the
/// det-1 representative of each unit orbit unique.
class PicardElement {
public:
    static PicardElement from_exact(const ExactMatrix3& m);
    static const PicardElement& identity_element();

    const ExactMatrix3& exact() const { return exact_; }
    const AutMatrix& float_cache() const { return float_; }

    PicardElement inverse() const;

    friend PicardElement operator*(const PicardElement& a, const PicardElement& b);
    friend bool operator==(const PicardElement& a, const PicardElement& b) {
        return a.exact_ == b.exact_;
    }

private:
    explicit PicardElement(ExactMatrix3 m);
    ExactMatrix3 exact_;
    AutMatrix float_;
};

/// Exact group membership: A* C A = C and det A = 1 over Z[i].
bool is_picard(const ExactMatrix3& a);

/// Float matrix whose entries round to Gaussian integers (within tol) forming
/// a group element.
bool is_picard(const AutMatrix& a, double tol = kDefaultTol);

/// Member of the stabilizer of infinity: group element and lower triangular.
bool is_stabilizer_infinity(const ExactMatrix3& a);

/// Exact Heisenberg translation; requires |gamma|^2 even (else not integral).
ExactMatrix3 heisenberg_exact(const GaussianInt& gamma, std::int64_t r);

/// Exact rotation M with beta = i^k; the action multiplies z1 by i^k.
ExactMatrix3 rotation_exact(int k);

/// The eight boundary automorphisms with their Q-form thresholds
/// tau = (1,1,1,1,2,2,2,2): Q_j(z) = tau_j * q_form(g[j-1], z).
struct GeneratorTable {
    std::vector<PicardElement> g;     // g[0] = J
    std::array<double, 8> q_threshold; // (1,1,1,1,2,2,2,2)
};

/// Built once and self-checked: exact membership, J^2 = I, and the exact
/// scalar match between each generator's first row and its Q-form coefficients.
const GeneratorTable& generators();

/// Antiholomorphic involution S(z1, z2) = (i conj(z1), -conj(z2)).
/// Height preserving; kept as a point map (it is not C-linear).
PointD2 symmetry_s(const PointD2& z);

struct ConjugationReport {
    bool ok = true;
    double max_error = 0.0;
    std::vector<std::string> failures;
};

/// Verifies S G_a S = G_b as point maps on random interior points for the
/// pairs (1,1), (2,4), (3,3), (4,2), (5,8), (6,7), (7,6), (8,5).
ConjugationReport check_s_conjugation(int samples = 100, double tol = 1e-9,
                                      std::uint64_t seed = 20260808u);

} // namespace picard

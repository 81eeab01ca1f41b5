#include "picard/picard_group.hpp"

#include <cmath>
#include <stdexcept>

namespace picard {

namespace {

constexpr ComplexF kI{0.0, 1.0};

bool round_to_exact(const AutMatrix& a, ExactMatrix3& out, double tol) {
    for (int k = 0; k < 9; ++k) {
        const ComplexF v = a.e[static_cast<std::size_t>(k)];
        const double re = std::round(v.real()), im = std::round(v.imag());
        if (std::abs(v.real() - re) > tol || std::abs(v.imag() - im) > tol) return false;
        out.e[static_cast<std::size_t>(k)] =
            GaussianInt{static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)};
    }
    return true;
}

// Q_j coefficient rows (c0 + c1 z1 + c2 z2) and thresholds, j = 1..8.
struct QRow {
    GaussianInt c0, c1, c2;
    std::int64_t tau;
};

const std::array<QRow, 8>& q_rows() {
    static const std::array<QRow, 8> rows = {{
        {{0, 0}, {0, 0}, {1, 0}, 1},
        {{-1, 1}, {-1, -1}, {1, 0}, 1},
        {{0, 1}, {-1, -1}, {1, 0}, 1},
        {{1, 1}, {-1, -1}, {1, 0}, 1},
        {{-1, 1}, {0, -2}, {2, 0}, 2},
        {{1, 1}, {0, -2}, {2, 0}, 2},
        {{-1, 1}, {-2, 0}, {2, 0}, 2},
        {{1, 1}, {-2, 0}, {2, 0}, 2},
    }};
    return rows;
}

const std::array<GaussianInt, 4> kUnits = {GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0},
                                           GaussianInt{0, -1}};

// First row of g equals scale * unit * (Q-row coefficients) for some unit.
bool row_matches_q_form(const ExactMatrix3& g, const QRow& row, const GaussianInt& scale) {
    for (const auto& u : kUnits) {
        const GaussianInt s = scale * u;
        if (s * g.at(0, 0) == row.c0 && s * g.at(0, 1) == row.c1 && s * g.at(0, 2) == row.c2)
            return true;
    }
    return false;
}

GeneratorTable build_generators() {
    GeneratorTable t;
    t.q_threshold = {1, 1, 1, 1, 2, 2, 2, 2};

    // G1 = J.
    t.g.push_back(PicardElement::from_exact(involution_j_exact()));

    // G_{3+r} = J (N_{(1+i, r+i)} M_{-1}),  r = -1, 0, 1.   All factors exact.
    for (std::int64_t r = -1; r <= 1; ++r) {
        const ExactMatrix3 p = heisenberg_exact(GaussianInt{1, 1}, r) * rotation_exact(2);
        t.g.push_back(PicardElement::from_exact(involution_j_exact() * p));
    }

    // Dilation-sqrt(2) family: the N A M factors are not integral, so compose
    // in floats and round; the product is exactly integral.
    const double s2 = std::sqrt(2.0);
    for (int r = -1; r <= 1; r += 2) {
        const ComplexF beta = ComplexF(-1.0, r) / s2;
        const AutMatrix p = heisenberg(ComplexF(-1.0, r), r) * dilation(s2) * rotation(beta);
        const AutMatrix g = heisenberg(ComplexF(1.0, 0.0), 0.5 * r) * involution_j() * p;
        ExactMatrix3 exact;
        if (!round_to_exact(g, exact, 1e-12))
            throw std::logic_error("generators: dilation-sqrt2 product is not integral");
        t.g.push_back(PicardElement::from_exact(exact));
    }
    for (int r = -1; r <= 1; r += 2) {
        const ComplexF beta = ComplexF(-1.0, r) / s2;
        const AutMatrix p = heisenberg(ComplexF(-r, -1.0), r) * dilation(s2) * rotation(beta);
        const AutMatrix g = heisenberg(kI, 0.5 * r) * involution_j() * p;
        ExactMatrix3 exact;
        if (!round_to_exact(g, exact, 1e-12))
            throw std::logic_error("generators: dilation-sqrt2 product is not integral");
        t.g.push_back(PicardElement::from_exact(exact));
    }

    // Self-checks.
    if (!(t.g[0] * t.g[0] == PicardElement::identity_element()))
        throw std::logic_error("generators: J^2 != I");
    for (int j = 0; j < 8; ++j) {
        if (!is_picard(t.g[static_cast<std::size_t>(j)].exact()))
            throw std::logic_error("generators: element fails exact membership");
        const GaussianInt scale = j < 4 ? GaussianInt{1, 0} : GaussianInt{1, 1};
        if (!row_matches_q_form(t.g[static_cast<std::size_t>(j)].exact(),
                                q_rows()[static_cast<std::size_t>(j)], scale))
            throw std::logic_error("generators: first row does not match its Q form");
    }
    return t;
}

} // namespace

PicardElement::PicardElement(ExactMatrix3 m) : exact_(m), float_(to_float(m)) {}

PicardElement PicardElement::from_exact(const ExactMatrix3& m) {
    if (!is_c_unitary(m))
        throw std::invalid_argument("PicardElement: matrix is not C-unitary");
    const GaussianInt d = det3(m);
    if (!d.is_unit())
        throw std::invalid_argument("PicardElement: determinant is not a unit");
    // det(d * m) = d^3 det(m) = d^4 = 1 for any unit d.
    return PicardElement(d == GaussianInt{1, 0} ? m : d * m);
}

const PicardElement& PicardElement::identity_element() {
    static const PicardElement id = PicardElement::from_exact(ExactMatrix3::identity());
    return id;
}

PicardElement PicardElement::inverse() const { return PicardElement(c_inverse(exact_)); }

PicardElement operator*(const PicardElement& a, const PicardElement& b) {
    return PicardElement(a.exact_ * b.exact_);
}

bool is_picard(const ExactMatrix3& a) {
    return is_c_unitary(a) && det3(a) == GaussianInt{1, 0};
}

bool is_picard(const AutMatrix& a, double tol) {
    ExactMatrix3 exact;
    return round_to_exact(a, exact, tol) && is_picard(exact);
}

bool is_stabilizer_infinity(const ExactMatrix3& a) {
    return is_picard(a) && a.at(0, 1).is_zero() && a.at(0, 2).is_zero() && a.at(1, 2).is_zero();
}

ExactMatrix3 heisenberg_exact(const GaussianInt& gamma, std::int64_t r) {
    const std::int64_t n = norm_sq(gamma);
    if (n % 2 != 0)
        throw std::invalid_argument("heisenberg_exact: |gamma|^2 must be even");
    ExactMatrix3 m = ExactMatrix3::identity();
    m.at(1, 0) = gamma;
    m.at(2, 0) = GaussianInt{r, n / 2};
    m.at(2, 1) = GaussianInt{0, 1} * gamma.conj();
    return m;
}

ExactMatrix3 rotation_exact(int k) {
    const std::size_t kk = static_cast<std::size_t>(((k % 4) + 4) % 4);
    const std::array<GaussianInt, 4> pow = {GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0},
                                            GaussianInt{0, -1}};
    ExactMatrix3 m;
    m.at(0, 0) = m.at(2, 2) = pow[kk];
    m.at(1, 1) = pow[(2 * kk) % 4].conj(); // i^{-2k} = conj(i^{2k})
    return m;
}

const GeneratorTable& generators() {
    static const GeneratorTable t = build_generators();
    return t;
}

PointD2 symmetry_s(const PointD2& z) {
    return {kI * std::conj(z.z1), -std::conj(z.z2)};
}

ConjugationReport check_s_conjugation(int samples, double tol, std::uint64_t seed) {
    static const std::array<int, 8> partner = {1, 4, 3, 2, 8, 7, 6, 5}; // 1-based targets
    const auto& table = generators();
    std::mt19937_64 rng(seed);
    ConjugationReport rep;
    for (int s = 0; s < samples; ++s) {
        const PointD2 z = random_interior_point(rng);
        for (int j = 0; j < 8; ++j) {
            const PointD2 lhs =
                symmetry_s(apply(table.g[static_cast<std::size_t>(j)].float_cache(), symmetry_s(z)));
            const PointD2 rhs =
                apply(table.g[static_cast<std::size_t>(partner[static_cast<std::size_t>(j)] - 1)]
                          .float_cache(),
                      z);
            const double err = std::abs(lhs.z1 - rhs.z1) + std::abs(lhs.z2 - rhs.z2);
            rep.max_error = std::max(rep.max_error, err);
            if (err > tol) {
                rep.ok = false;
                rep.failures.push_back("S G" + std::to_string(j + 1) + " S != G" +
                                       std::to_string(partner[static_cast<std::size_t>(j)]));
            }
        }
    }
    return rep;
}

} // namespace picard

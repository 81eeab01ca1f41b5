#include "picard/automorphism.hpp"

#include <cmath>
#include <stdexcept>

namespace picard {

namespace {

constexpr ComplexF kI{0.0, 1.0};

AutMatrix form_c_float() {
    AutMatrix c;
    c.at(0, 2) = kI;
    c.at(1, 1) = 1.0;
    c.at(2, 0) = -kI;
    return c;
}

ComplexF denominator(const AutMatrix& g, const PointD2& z) {
    return g.at(0, 0) + g.at(0, 1) * z.z1 + g.at(0, 2) * z.z2;
}

} // namespace

AutMatrix AutMatrix::identity() {
    AutMatrix m;
    m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 1.0;
    return m;
}

AutMatrix AutMatrix::adjoint() const {
    AutMatrix m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            m.at(r, c) = std::conj(at(c, r));
    return m;
}

AutMatrix operator*(const AutMatrix& a, const AutMatrix& b) {
    AutMatrix m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            ComplexF s = 0.0;
            for (int k = 0; k < 3; ++k) s += a.at(r, k) * b.at(k, c);
            m.at(r, c) = s;
        }
    return m;
}

AutMatrix to_float(const ExactMatrix3& m) {
    AutMatrix f;
    for (int k = 0; k < 9; ++k) {
        const auto& g = m.e[static_cast<std::size_t>(k)];
        f.e[static_cast<std::size_t>(k)] = ComplexF(static_cast<double>(g.re), static_cast<double>(g.im));
    }
    return f;
}

double c_unitarity_error(const AutMatrix& a) {
    const AutMatrix res = a.adjoint() * form_c_float() * a;
    const AutMatrix c = form_c_float();
    double err = 0.0;
    for (int k = 0; k < 9; ++k)
        err = std::max(err, std::abs(res.e[static_cast<std::size_t>(k)] - c.e[static_cast<std::size_t>(k)]));
    return err;
}

bool is_c_unitary(const AutMatrix& a, double tol) { return c_unitarity_error(a) <= tol; }

AutMatrix c_inverse(const AutMatrix& a) { return form_c_float() * a.adjoint() * form_c_float(); }

PointD2 apply(const AutMatrix& g, const PointD2& z) {
    const ComplexF den = denominator(g, z);
    if (std::abs(den) < 1e-300)
        throw std::domain_error("apply: singular evaluation (denominator vanishes)");
    return {(g.at(1, 0) + g.at(1, 1) * z.z1 + g.at(1, 2) * z.z2) / den,
            (g.at(2, 0) + g.at(2, 1) * z.z1 + g.at(2, 2) * z.z2) / den};
}

double q_form(const AutMatrix& g, const PointD2& z) { return std::norm(denominator(g, z)); }

ComplexF jacobian_det(const AutMatrix& g, const PointD2& z) {
    const ComplexF den = denominator(g, z);
    if (std::abs(den) < 1e-300)
        throw std::domain_error("jacobian_det: singular evaluation");
    return 1.0 / (den * den * den);
}

AutMatrix heisenberg(ComplexF gamma, double r) {
    AutMatrix m = AutMatrix::identity();
    m.at(1, 0) = gamma;
    m.at(2, 0) = ComplexF(r, 0.5 * std::norm(gamma));
    m.at(2, 1) = kI * std::conj(gamma);
    return m;
}

AutMatrix dilation(double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("dilation: delta must be positive");
    AutMatrix m;
    m.at(0, 0) = 1.0 / delta;
    m.at(1, 1) = 1.0;
    m.at(2, 2) = delta;
    return m;
}

AutMatrix rotation(ComplexF beta) {
    if (std::abs(std::abs(beta) - 1.0) > 1e-12)
        throw std::invalid_argument("rotation: |beta| must equal 1");
    AutMatrix m;
    m.at(0, 0) = beta;
    m.at(1, 1) = 1.0 / (beta * beta);
    m.at(2, 2) = beta;
    return m;
}

AutMatrix involution_j() { return to_float(involution_j_exact()); }

const ExactMatrix3& involution_j_exact() {
    static const ExactMatrix3 j = [] {
        ExactMatrix3 m;
        m.at(0, 2) = GaussianInt{0, 1};
        m.at(1, 1) = GaussianInt{-1};
        m.at(2, 0) = GaussianInt{0, -1};
        return m;
    }();
    return j;
}

AutMatrix langlands_compose(const AutParams& p) {
    return heisenberg(p.gamma, p.r) * dilation(p.delta) * rotation(p.beta);
}

AutParams langlands_decompose(const AutMatrix& p) {
    double scale = 0.0;
    for (const auto& v : p.e) scale = std::max(scale, std::abs(v));
    const double shape_tol = 1e-9 * std::max(1.0, scale);
    if (std::abs(p.at(0, 1)) > shape_tol || std::abs(p.at(0, 2)) > shape_tol ||
        std::abs(p.at(1, 2)) > shape_tol)
        throw std::invalid_argument("langlands_decompose: matrix is not lower triangular");

    const ComplexF p33 = p.at(2, 2);
    if (std::abs(p33) < 1e-12)
        throw std::domain_error("langlands_decompose: degenerate (p33 = 0)");

    AutParams out;
    out.delta = std::abs(p33);
    out.beta = p33 / out.delta;
    // p32 = i conj(gamma) beta^-2  =>  gamma = conj(-i p32 beta^2)
    out.gamma = std::conj(-kI * p.at(2, 1) * out.beta * out.beta);
    // p31 = (beta/delta)(r + i|gamma|^2/2)
    const ComplexF w = p.at(2, 0) * out.delta / out.beta;
    out.r = w.real();

    const AutMatrix rebuilt = langlands_compose(out);
    for (int k = 0; k < 9; ++k)
        if (std::abs(rebuilt.e[static_cast<std::size_t>(k)] - p.e[static_cast<std::size_t>(k)]) >
            1e-9 * std::max(1.0, scale))
            throw std::invalid_argument(
                "langlands_decompose: input is not a stabilizer element (NAM mismatch)");
    return out;
}

NjpDecomposition njp_decompose(const ExactMatrix3& g) {
    const GaussianInt g11 = g.at(0, 0), g12 = g.at(0, 1), g13 = g.at(0, 2);
    if (g13.is_zero())
        throw std::domain_error("njp_decompose: element fixes infinity (g13 = 0)");

    // Exact parameter identities on the first row.
    const std::int64_t delta_sq = norm_sq(g13);
    const GaussianInt w = g11 * g13.conj();         // r + i |gamma|^2/2
    const GaussianInt gs = (g13 * g13 * g12).conj(); // delta^2 gamma
    if (2 * w.im != norm_sq(g12))
        throw std::invalid_argument("njp_decompose: inconsistent element (not in the group)");

    NjpDecomposition out;
    out.params.delta = std::sqrt(static_cast<double>(delta_sq));
    out.params.r = static_cast<double>(w.re);
    out.params.gamma = ComplexF(static_cast<double>(gs.re), static_cast<double>(gs.im)) /
                       static_cast<double>(delta_sq);
    out.params.beta = -kI * ComplexF(static_cast<double>(g13.re), static_cast<double>(g13.im)) /
                      out.params.delta;

    out.p = langlands_compose(out.params);
    out.n = to_float(g) * c_inverse(out.p) * involution_j();

    // N must be a unit lower-triangular Heisenberg matrix.
    const AutMatrix& n = out.n;
    const ComplexF gamma_n = n.at(1, 0);
    const double err =
        std::max({std::abs(n.at(0, 0) - 1.0), std::abs(n.at(1, 1) - 1.0), std::abs(n.at(2, 2) - 1.0),
                  std::abs(n.at(0, 1)), std::abs(n.at(0, 2)), std::abs(n.at(1, 2)),
                  std::abs(n.at(2, 1) - kI * std::conj(gamma_n)),
                  std::abs(n.at(2, 0).imag() - 0.5 * std::norm(gamma_n))});
    if (err > 1e-9)
        throw std::invalid_argument("njp_decompose: inconsistent element (N is not Heisenberg)");
    return out;
}

} // namespace picard

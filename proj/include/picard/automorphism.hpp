#pragma once

#include <array>

#include "picard/gaussian.hpp"
#include "picard/geometry.hpp"

namespace picard {

/// Row-major 3x3 complex matrix for holomorphic automorphisms of D^2.
/// An automorphism matrix satisfies A* C A = C with C = [[0,0,i],[0,1,0],[-i,0,0]];
/// the first matrix row is the denominator of the fractional-linear action.
struct AutMatrix {
    std::array<ComplexF, 9> e{};

    ComplexF& at(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }
    const ComplexF& at(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }

    static AutMatrix identity();
    AutMatrix adjoint() const;

    friend AutMatrix operator*(const AutMatrix& a, const AutMatrix& b);
};

AutMatrix to_float(const ExactMatrix3& m);

/// Max-norm of A* C A - C.
double c_unitarity_error(const AutMatrix& a);
bool is_c_unitary(const AutMatrix& a, double tol = kDefaultTol);

/// Inverse of a C-unitary matrix, A^{-1} = C A* C.
AutMatrix c_inverse(const AutMatrix& a);

/// Fractional-linear action of G on the hyperquadric model.
PointD2 apply(const AutMatrix& g, const PointD2& z);

/// Q(G)(z) = |g11 + g12 z1 + g13 z2|^2, the squared first-row affine form.
double q_form(const AutMatrix& g, const PointD2& z);

/// det G'(z) = (g11 + g12 z1 + g13 z2)^{-3}; satisfies |det G'|^2 = Q(G)^{-3}.
ComplexF jacobian_det(const AutMatrix& g, const PointD2& z);

/// Heisenberg translation N: (z1, z2) -> (z1 + gamma, z2 + r + i|gamma|^2/2 + i z1 conj(gamma)).
AutMatrix heisenberg(ComplexF gamma, double r);

/// Dilation diag(1/delta, 1, delta): (z1, z2) -> (delta z1, delta^2 z2).  Requires delta > 0.
AutMatrix dilation(double delta);

/// Rotation diag(beta, beta^-2, beta): (z1, z2) -> (beta^-3 z1, z2).  Requires |beta| = 1.
AutMatrix rotation(ComplexF beta);

/// The involution J: (z1, z2) -> (i z1 / z2, -1/z2), with J^2 = I.
AutMatrix involution_j();
const ExactMatrix3& involution_j_exact();

/// Parameters of the stabilizer-of-infinity decomposition P = N A M.
struct AutParams {
    double delta = 1.0;
    ComplexF beta{1.0, 0.0};
    double r = 0.0;
    ComplexF gamma{0.0, 0.0};
};

/// N_{gamma,r} * A_delta * M_beta as one lower-triangular matrix.
AutMatrix langlands_compose(const AutParams& p);

/// Recovers (delta, beta, r, gamma) from a lower-triangular C-unitary matrix;
/// langlands_compose reproduces the input entrywise.  beta is the
/// matrix-determined value p33/delta.
AutParams langlands_decompose(const AutMatrix& p);

struct NjpDecomposition {
    AutMatrix n; // Heisenberg factor
    AutMatrix p; // stabilizer factor, lower triangular
    AutParams params;
};

/// Factorization G = N J P of a group element not fixing infinity (g13 != 0).
/// Parameters come from the exact first-row identities
///   g11 conj(g13) = r + i|gamma|^2/2,  |g13|^2 = delta^2,  g13^2 g12 = delta^2 conj(gamma).
NjpDecomposition njp_decompose(const ExactMatrix3& g);

} // namespace picard

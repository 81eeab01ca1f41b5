#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/gaussian.hpp"
#include "picard/geometry.hpp"

namespace picard {

/// A candidate first row (g11, g12, g13) of a group element not fixing
/// infinity, the data that determines its Q form.  Unit-scaling the whole row
/// leaves the Q form unchanged, so rows are kept unit-canonical
/// (Re g13 > 0, Im g13 >= 0).
struct CandidateFamily {
    GaussianInt g11, g12, g13;

    std::int64_t delta_sq() const { return norm_sq(g13); }
    std::int64_t r() const { return (g11 * g13.conj()).re; }
    std::int64_t gamma_norm_sq() const { return norm_sq(g12); }
    /// g12 conj(g13): unit-invariant, drives the fine case split.
    GaussianInt q_coeff_s() const { return g12 * g13.conj(); }
    /// g13 != 0 and 2 Im(g11 conj(g13)) = |g12|^2.
    bool consistent() const;
    std::string str() const;

    friend bool operator==(const CandidateFamily&, const CandidateFamily&) = default;
};

/// Unit-canonical form of a row (multiplies by the unit making Re g13 > 0,
/// Im g13 >= 0).
CandidateFamily canonical_row(const GaussianInt& g11, const GaussianInt& g12,
                              const GaussianInt& g13);

struct CertReport {
    std::string item;
    bool certified = false;
    double min_value = 0.0;
    std::optional<PointD2> argmin;
    std::string grid_spec;
    std::string detail;
};

/// Elimination bounds: |g12| >= gamma0(delta) forces Q >= 1 on F1, and with
/// |g12| < gamma0(delta), |r| >= r0(delta) forces Q >= 1 on F1.
/// Defined for delta in {1, sqrt2, 2, sqrt5}.
double gamma0(double delta);
double r0(double delta);

/// Grid minimization of Q over F1: (x1, y1) on a triangle grid, x2 on
/// [-1/2, 1/2], and y2 minimized analytically over its feasible ray (Q is an
/// upward parabola in y2 with leading coefficient |g13|^2).
/// certified means min >= 1 - 1e-6.
CertReport q_min_over_f1(const CandidateFamily& family, int grid_n, double L = kDefaultL);

/// All consistent unit-canonical rows with |g13|^2 in {1,2,4,5},
/// |g12| < gamma0(|g13|) and |Re(g11 conj g13)| <= ceil(r0(|g13|)).
std::vector<CandidateFamily> enumerate_candidates();

/// Classifies every enumerated family: eliminated (grid min >= 1 - 1e-6),
/// retained (unit multiple of a generator row), or dominated ((1+i)-unit
/// multiple of a generator row, Q doubled).  Certifies that the retained rows
/// are exactly the eight generators and nothing falls outside the classes.
std::vector<CertReport> certify_dichotomy(int grid_n = 50);

/// At each of the eight necessity points P_k: the prism conditions hold,
/// Q_k(P_k) < tau_k, and Q_j(P_k) >= tau_j for j != k.
std::vector<CertReport> certify_necessity();

/// Siegel-property witnesses: R_2, R_3, R_4 and their images under G_2, G_3,
/// G_4 lie in S(siegel_l); the fixed-line witnesses of G_5..G_8 lie in
/// S(siegel_l) and are fixed to 1e-12.  Requires 0 < epsilon <= 0.01.
std::vector<CertReport> certify_siegel_witnesses(double epsilon, double siegel_l = 0.1);

/// Per-case certification of the elimination case catalog; see lemma_catalog()
/// for the known ids.  Grid-certifies the eliminated subfamily (and checks the
/// r-parity claims for the ids carrying one).
CertReport certify_lemma(const std::string& id, int grid_n = 50);

const std::vector<std::string>& lemma_catalog();

} // namespace picard

#include "picard/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "picard/automorphism.hpp"
#include "picard/domain.hpp"
#include "picard/picard_group.hpp"

namespace picard {

namespace {

constexpr double kMinTarget = 1.0 - 1e-6;
constexpr ComplexF kI{0.0, 1.0};

const std::array<GaussianInt, 4> kUnits = {GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0},
                                           GaussianInt{0, -1}};

bool is_known_delta(double delta) {
    for (double d : {1.0, std::sqrt(2.0), 2.0, std::sqrt(5.0)})
        if (std::abs(delta - d) <= 1e-12) return true;
    return false;
}

ComplexF to_complex(const GaussianInt& g) {
    return {static_cast<double>(g.re), static_cast<double>(g.im)};
}

std::vector<GaussianInt> gaussians_with_norm_below(double bound) {
    std::vector<GaussianInt> out;
    const auto m = static_cast<std::int64_t>(std::floor(std::sqrt(bound)));
    for (std::int64_t a = -m; a <= m; ++a)
        for (std::int64_t b = -m; b <= m; ++b)
            if (static_cast<double>(a * a + b * b) < bound) out.push_back(GaussianInt{a, b});
    return out;
}

bool row_less(const CandidateFamily& a, const CandidateFamily& b) {
    const auto key = [](const CandidateFamily& f) {
        return std::array<std::int64_t, 6>{f.g13.re, f.g13.im, f.g12.re, f.g12.im, f.g11.re, f.g11.im};
    };
    return key(a) < key(b);
}

// Canonical rows of the eight generators and of their (1+i) multiples.
struct GeneratorRows {
    std::vector<CandidateFamily> unit;    // index j-1 -> canonical row of G_j
    std::vector<CandidateFamily> doubled; // canonical rows of (1+i) * G_j row
};

const GeneratorRows& generator_rows() {
    static const GeneratorRows rows = [] {
        GeneratorRows out;
        const GaussianInt lam{1, 1};
        for (const auto& g : generators().g) {
            const auto& m = g.exact();
            out.unit.push_back(canonical_row(m.at(0, 0), m.at(0, 1), m.at(0, 2)));
            out.doubled.push_back(
                canonical_row(lam * m.at(0, 0), lam * m.at(0, 1), lam * m.at(0, 2)));
        }
        return out;
    }();
    return rows;
}

int match_generator(const CandidateFamily& f, const std::vector<CandidateFamily>& rows) {
    for (std::size_t j = 0; j < rows.size(); ++j)
        if (f == rows[j]) return static_cast<int>(j) + 1;
    return 0;
}

// The eight necessity points.
const std::array<PointD2, 8>& necessity_points() {
    static const std::array<PointD2, 8> pts = {{
        {{0.2, 0.2}, {0.1, 0.8}},
        {{0.25, 0.72}, {0.45, 0.9}},
        {{0.39, 0.6}, {-0.45, 0.9}},
        {{0.72, 0.25}, {-0.45, 0.9}},
        {{0.7, 0.05}, {0.45, 0.9}},
        {{0.7, 0.02}, {-0.45, 0.9}},
        {{0.02, 0.7}, {0.45, 0.9}},
        {{0.02, 0.7}, {-0.45, 0.9}},
    }};
    return pts;
}

struct LemmaSpec {
    std::string description;
    // Selects the eliminated rows out of the main enumeration (or a dedicated
    // one for out-of-range cases); empty parity means no parity claim.
    std::function<bool(const CandidateFamily&)> selects;
    bool dedicated_enumeration = false; // use the delta^2 in {8,9} spot-check set
    int parity = -1;                    // 0: r even on subfamily, 1: r odd
    std::function<bool(const CandidateFamily&)> parity_scope; // rows the parity claim covers
};

bool s_in(const CandidateFamily& f, std::initializer_list<GaussianInt> values) {
    const GaussianInt s = f.q_coeff_s();
    for (const auto& v : values)
        if (s == v) return true;
    return false;
}

const std::map<std::string, LemmaSpec>& lemma_specs() {
    static const std::map<std::string, LemmaSpec> specs = [] {
        std::map<std::string, LemmaSpec> m;
        m["l103"] = {"rows with |g13|^2 >= 8 (spot check at |g13|^2 in {8, 9})",
                     [](const CandidateFamily& f) { return f.delta_sq() >= 8; }, true, -1, {}};
        m["l112"] = {"rows with gamma = 0 (g12 = 0), every dilation",
                     [](const CandidateFamily& f) { return f.g12.is_zero(); }, false, -1, {}};
        m["l115"] = {"every row with |g13|^2 = 5",
                     [](const CandidateFamily& f) { return f.delta_sq() == 5; }, false, -1, {}};
        m["l116"] = {"|g13|^2 = 1, |g12|^2 = 4",
                     [](const CandidateFamily& f) {
                         return f.delta_sq() == 1 && f.gamma_norm_sq() == 4;
                     },
                     false, -1, {}};
        m["l117"] = {"|g13|^2 = 1, |g12|^2 = 2, |r| >= 2",
                     [](const CandidateFamily& f) {
                         return f.delta_sq() == 1 && f.gamma_norm_sq() == 2 && std::abs(f.r()) >= 2;
                     },
                     false, -1, {}};
        m["l1175"] = {"|g13|^2 = 1, |g12|^2 = 2, |r| <= 1, g12 conj(g13) != -1-i",
                      [](const CandidateFamily& f) {
                          return f.delta_sq() == 1 && f.gamma_norm_sq() == 2 &&
                                 std::abs(f.r()) <= 1 &&
                                 s_in(f, {GaussianInt{-1, 1}, GaussianInt{1, -1}, GaussianInt{1, 1}});
                      },
                      false, -1, {}};
        m["l118"] = {"|g13|^2 = 2, |g12|^2 = 4",
                     [](const CandidateFamily& f) {
                         return f.delta_sq() == 2 && f.gamma_norm_sq() == 4;
                     },
                     false, -1, {}};
        m["l121"] = {"|g13|^2 = 2, |g12|^2 = 2, g12 conj(g13) in {2, 2i}",
                     [](const CandidateFamily& f) {
                         return f.delta_sq() == 2 && f.gamma_norm_sq() == 2 &&
                                s_in(f, {GaussianInt{2, 0}, GaussianInt{0, 2}});
                     },
                     false, -1, {}};
        const auto l124_scope = [](const CandidateFamily& f) {
            return f.delta_sq() == 2 && f.gamma_norm_sq() == 2 &&
                   s_in(f, {GaussianInt{-2, 0}, GaussianInt{0, -2}});
        };
        m["l124"] = {"|g13|^2 = 2, |g12|^2 = 2, g12 conj(g13) in {-2, -2i}, |r| >= 3",
                     [l124_scope](const CandidateFamily& f) {
                         return l124_scope(f) && std::abs(f.r()) >= 3;
                     },
                     false, 1, l124_scope};
        m["l124-parity"] = {"r odd on |g13|^2 = 2, |g12|^2 = 2, g12 conj(g13) in {-2, -2i}",
                            {}, false, 1, l124_scope};
        m["l201"] = {"|g13|^2 = 4, |g12|^2 in {2, 8}",
                     [](const CandidateFamily& f) {
                         return f.delta_sq() == 4 &&
                                (f.gamma_norm_sq() == 2 || f.gamma_norm_sq() == 8);
                     },
                     false, -1, {}};
        m["l205"] = {"|g13|^2 = 4, |g12|^2 = 4, g12 conj(g13) in {4, 4i}",
                     [](const CandidateFamily& f) {
                         return f.delta_sq() == 4 && f.gamma_norm_sq() == 4 &&
                                s_in(f, {GaussianInt{4, 0}, GaussianInt{0, 4}});
                     },
                     false, -1, {}};
        const auto l210_scope = [](const CandidateFamily& f) {
            return f.delta_sq() == 4 && f.gamma_norm_sq() == 4 &&
                   s_in(f, {GaussianInt{-4, 0}, GaussianInt{0, -4}});
        };
        m["l210"] = {"|g13|^2 = 4, |g12|^2 = 4, g12 conj(g13) in {-4, -4i}, |r| >= 4 or r = 0",
                     [l210_scope](const CandidateFamily& f) {
                         return l210_scope(f) && (std::abs(f.r()) >= 4 || f.r() == 0);
                     },
                     false, 0, l210_scope};
        m["l210-parity"] = {"r even on |g13|^2 = 4, |g12|^2 = 4, g12 conj(g13) in {-4, -4i}",
                            {}, false, 0, l210_scope};
        return m;
    }();
    return specs;
}

// Spot-check enumeration past the crude bound: |g13|^2 in {8, 9}.
std::vector<CandidateFamily> enumerate_past_bound() {
    std::vector<CandidateFamily> out;
    std::set<std::array<std::int64_t, 6>> seen;
    const std::vector<GaussianInt> g13s = {GaussianInt{2, 2}, GaussianInt{3, 0}};
    for (const auto& g13 : g13s) {
        const std::int64_t d2 = norm_sq(g13);
        for (const auto& g12 : gaussians_with_norm_below(8.0 + 0.5)) {
            const std::int64_t n12 = norm_sq(g12);
            if (n12 % 2 != 0) continue;
            for (std::int64_t r = -12; r <= 12; ++r) {
                GaussianInt g11;
                if (!exact_divide(GaussianInt{r, n12 / 2} * g13, GaussianInt{d2, 0}, g11)) continue;
                const CandidateFamily f = canonical_row(g11, g12, g13);
                if (seen.insert({f.g13.re, f.g13.im, f.g12.re, f.g12.im, f.g11.re, f.g11.im}).second)
                    out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end(), row_less);
    return out;
}

} // namespace

bool CandidateFamily::consistent() const {
    return !g13.is_zero() && 2 * (g11 * g13.conj()).im == norm_sq(g12);
}

std::string CandidateFamily::str() const {
    std::ostringstream os;
    os << "(" << g11 << ") + (" << g12 << ") z1 + (" << g13 << ") z2";
    return os.str();
}

CandidateFamily canonical_row(const GaussianInt& g11, const GaussianInt& g12,
                              const GaussianInt& g13) {
    if (g13.is_zero()) throw std::invalid_argument("canonical_row: g13 must be nonzero");
    for (const auto& u : kUnits) {
        const GaussianInt w = u * g13;
        if (w.re > 0 && w.im >= 0) return {u * g11, u * g12, w};
    }
    throw std::logic_error("canonical_row: unreachable");
}

double gamma0(double delta) {
    if (!is_known_delta(delta))
        throw std::invalid_argument("gamma0: delta must be one of 1, sqrt2, 2, sqrt5");
    const double root = (1.0 - std::sqrt(3.0)) * delta * delta + 2.0 * delta;
    if (root < 0.0) throw std::invalid_argument("gamma0: negative discriminant");
    return delta + std::sqrt(root);
}

double r0(double delta) {
    const double g0 = gamma0(delta);
    const double root = 1.0 - delta * delta * (1.0 - std::sqrt(3.0) / 2.0);
    if (root < 0.0) throw std::invalid_argument("r0: negative discriminant");
    return delta * g0 + 0.5 * delta * delta + delta * std::sqrt(root);
}

CertReport q_min_over_f1(const CandidateFamily& family, int grid_n, double L) {
    if (!family.consistent())
        throw std::invalid_argument("q_min_over_f1: inconsistent family " + family.str());
    if (grid_n < 2) throw std::invalid_argument("q_min_over_f1: grid_n must be >= 2");

    const ComplexF c0 = to_complex(family.g11);
    const ComplexF c1 = to_complex(family.g12);
    const ComplexF c2 = to_complex(family.g13);
    const double lead = std::norm(c2); // |g13|^2 > 0

    double best = std::numeric_limits<double>::infinity();
    double bx1 = 0, by1 = 0, bx2 = 0, by2 = 1;
    const double h = 1.0 / grid_n;
    for (int i = 0; i <= grid_n; ++i) {
        const double x1 = i * h;
        for (int j = 0; j + i <= grid_n; ++j) {
            const double y1 = j * h;
            const ComplexF z1(x1, y1);
            const ComplexF base = c0 + c1 * z1;
            const double floor_h = L + 0.5 * std::norm(z1);
            for (int k = 0; k <= grid_n; ++k) {
                const double x2 = -0.5 + k * h;
                // Q(y2) = |c + i c2 y2|^2: upward parabola, vertex at -b/lead.
                const ComplexF c = base + c2 * x2;
                const double y_lo = std::max(std::sqrt(1.0 - x2 * x2), floor_h);
                const double b = (std::conj(c) * kI * c2).real();
                const double y_vertex = -b / lead;
                const double y2 = y_vertex >= y_lo ? y_vertex : y_lo;
                const double q = std::norm(c + kI * c2 * y2);
                if (q < best) {
                    best = q;
                    bx1 = x1; by1 = y1; bx2 = x2; by2 = y2;
                }
            }
        }
    }

    CertReport rep;
    rep.item = family.str();
    rep.min_value = best;
    rep.argmin = PointD2(ComplexF(bx1, by1), ComplexF(bx2, by2));
    rep.certified = best >= kMinTarget;
    std::ostringstream spec;
    spec << "grid_n=" << grid_n << " L=" << L;
    rep.grid_spec = spec.str();
    return rep;
}

std::vector<CandidateFamily> enumerate_candidates() {
    std::vector<CandidateFamily> out;
    std::set<std::array<std::int64_t, 6>> seen;

    const std::map<std::int64_t, std::vector<GaussianInt>> g13_reps = {
        {1, {GaussianInt{1, 0}}},
        {2, {GaussianInt{1, 1}}},
        {4, {GaussianInt{2, 0}}},
        {5, {GaussianInt{2, 1}, GaussianInt{1, 2}}},
    };
    for (const auto& [d2, reps] : g13_reps) {
        const double delta = std::sqrt(static_cast<double>(d2));
        const double g0 = gamma0(delta);
        const auto rmax = static_cast<std::int64_t>(std::ceil(r0(delta)));
        const auto g12s = gaussians_with_norm_below(g0 * g0);
        for (const auto& g13 : reps) {
            for (const auto& g12 : g12s) {
                const std::int64_t n12 = norm_sq(g12);
                if (n12 % 2 != 0) continue; // |gamma|^2/2 must be integral
                for (std::int64_t r = -rmax; r <= rmax; ++r) {
                    // g11 = (r + i|gamma|^2/2) g13 / delta^2 must be integral.
                    GaussianInt g11;
                    if (!exact_divide(GaussianInt{r, n12 / 2} * g13, GaussianInt{d2, 0}, g11))
                        continue;
                    const CandidateFamily f = canonical_row(g11, g12, g13);
                    if (seen.insert({f.g13.re, f.g13.im, f.g12.re, f.g12.im, f.g11.re, f.g11.im})
                            .second)
                        out.push_back(f);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), row_less);
    return out;
}

std::vector<CertReport> certify_dichotomy(int grid_n) {
    const auto families = enumerate_candidates();
    const auto& rows = generator_rows();
    std::vector<CertReport> out;
    std::set<int> retained_found;

    for (const auto& f : families) {
        const int unit_match = match_generator(f, rows.unit);
        const int doubled_match = match_generator(f, rows.doubled);
        CertReport rep = q_min_over_f1(f, grid_n);
        const bool eliminated = rep.certified;
        if (unit_match) retained_found.insert(unit_match);

        std::ostringstream detail;
        if (eliminated) detail << "eliminated";
        if (unit_match) detail << (eliminated ? ", " : "") << "retained: generator row G"
                               << unit_match;
        if (doubled_match) {
            if (eliminated || unit_match) detail << ", ";
            detail << "dominated: (1+i) x generator row G" << doubled_match;
        }
        rep.certified = eliminated || unit_match != 0 || doubled_match != 0;
        if (!rep.certified) detail << "unclassified row with min " << rep.min_value;
        rep.detail = detail.str();
        out.push_back(std::move(rep));
    }

    CertReport summary;
    summary.item = "retained rows = the eight generators";
    summary.certified = retained_found == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8};
    summary.min_value = static_cast<double>(retained_found.size());
    summary.detail = "families: " + std::to_string(families.size());
    out.push_back(std::move(summary));
    return out;
}

std::vector<CertReport> certify_necessity() {
    const auto& pts = necessity_points();
    std::vector<CertReport> out;
    for (int k = 1; k <= 8; ++k) {
        const PointD2& p = pts[static_cast<std::size_t>(k - 1)];
        CertReport rep;
        rep.item = "P" + std::to_string(k);
        rep.argmin = p;
        bool ok = p.z1.real() >= 0 && p.z1.imag() >= 0 && p.z1.real() + p.z1.imag() <= 1.0 &&
                  std::abs(p.z2.real()) <= 0.5;
        double sep = std::numeric_limits<double>::infinity();
        std::ostringstream detail;
        for (int j = 1; j <= 8; ++j) {
            const double q = q_value(j, p);
            const double tau = q_threshold(j);
            if (j == k) {
                ok = ok && q < tau;
                sep = std::min(sep, tau - q);
                detail << "Q" << k << "(P" << k << ")=" << q << " < " << tau;
            } else {
                ok = ok && q >= tau;
                sep = std::min(sep, q - tau);
            }
        }
        rep.certified = ok;
        rep.min_value = sep;
        rep.detail = detail.str();
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<CertReport> certify_siegel_witnesses(double epsilon, double siegel_l) {
    if (!(epsilon > 0.0 && epsilon <= 0.01))
        throw std::invalid_argument("certify_siegel_witnesses: epsilon must lie in (0, 0.01]");
    if (!(siegel_l > 0.0 && siegel_l < max_siegel_l()))
        throw std::invalid_argument("certify_siegel_witnesses: invalid Siegel parameter");

    const auto& table = generators();
    std::vector<CertReport> out;

    const std::array<PointD2, 3> witnesses = {{
        {{0.875, 0.0625}, {-0.1875, 1.0 + epsilon}},
        {{0.25, 0.25}, {0.0, 1.0 + epsilon}},
        {{0.0625, 0.875}, {0.1875, 1.0 + epsilon}},
    }};
    for (int j = 2; j <= 4; ++j) {
        const PointD2& w = witnesses[static_cast<std::size_t>(j - 2)];
        const PointD2 img = apply(table.g[static_cast<std::size_t>(j - 1)].float_cache(), w);
        CertReport rep;
        rep.item = "R" + std::to_string(j);
        rep.argmin = w;
        rep.certified = in_siegel_set(w, siegel_l) && in_siegel_set(img, siegel_l);
        rep.min_value = std::min(height(w), height(img));
        std::ostringstream detail;
        detail << "height(R)=" << height(w) << " height(G(R))=" << height(img)
               << " L=" << siegel_l;
        rep.detail = detail.str();
        out.push_back(std::move(rep));
    }

    // Fixed-line witnesses: z2 = i z1 for G5, G6 and z2 = z1 for G7, G8.
    const PointD2 on_diag(ComplexF(1.0 - 2.0 * epsilon, epsilon),
                          ComplexF(-epsilon, 1.0 - 2.0 * epsilon));
    const PointD2 on_line(ComplexF(0.3, 0.5), ComplexF(0.3, 0.5));
    for (int j = 5; j <= 8; ++j) {
        const PointD2& w = j <= 6 ? on_diag : on_line;
        const PointD2 img = apply(table.g[static_cast<std::size_t>(j - 1)].float_cache(), w);
        const double move = std::abs(img.z1 - w.z1) + std::abs(img.z2 - w.z2);
        CertReport rep;
        rep.item = "fixed-line witness G" + std::to_string(j);
        rep.argmin = w;
        rep.certified = in_siegel_set(w, siegel_l) && move <= 1e-12;
        rep.min_value = move;
        std::ostringstream detail;
        detail << "displacement=" << move << " height=" << height(w) << " L=" << siegel_l;
        rep.detail = detail.str();
        out.push_back(std::move(rep));
    }
    return out;
}

CertReport certify_lemma(const std::string& id, int grid_n) {
    const auto& specs = lemma_specs();
    const auto it = specs.find(id);
    if (it == specs.end()) throw std::invalid_argument("certify_lemma: unknown id " + id);
    const LemmaSpec& spec = it->second;

    const std::vector<CandidateFamily> pool =
        spec.dedicated_enumeration ? enumerate_past_bound() : enumerate_candidates();

    CertReport rep;
    rep.item = id + ": " + spec.description;
    rep.certified = true;
    rep.min_value = std::numeric_limits<double>::infinity();
    int count = 0;

    if (spec.selects) {
        for (const auto& f : pool) {
            if (!spec.selects(f)) continue;
            ++count;
            const CertReport sub = q_min_over_f1(f, grid_n);
            if (sub.min_value < rep.min_value) {
                rep.min_value = sub.min_value;
                rep.argmin = sub.argmin;
                rep.grid_spec = sub.grid_spec;
            }
            if (!sub.certified) {
                rep.certified = false;
                rep.detail = "bound fails at " + f.str();
            }
        }
    }
    if (spec.parity >= 0) {
        for (const auto& f : pool) {
            if (!spec.parity_scope(f)) continue;
            ++count;
            if (((f.r() % 2) + 2) % 2 != spec.parity) {
                rep.certified = false;
                rep.detail = "parity fails at " + f.str();
            }
        }
    }
    if (count == 0) {
        rep.certified = false;
        rep.detail = "empty subfamily";
    }
    if (rep.detail.empty())
        rep.detail = std::to_string(count) + " rows checked";
    if (!std::isfinite(rep.min_value)) rep.min_value = 0.0;
    return rep;
}

const std::vector<std::string>& lemma_catalog() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, spec] : lemma_specs()) v.push_back(id);
        return v;
    }();
    return ids;
}

} // namespace picard

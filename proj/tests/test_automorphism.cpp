#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "picard/automorphism.hpp"
#include "picard/picard_group.hpp"
#include "test_util.hpp"

using namespace picard;
using doctest::Approx;

namespace {

double dist(const PointD2& a, const PointD2& b) {
    return std::abs(a.z1 - b.z1) + std::abs(a.z2 - b.z2);
}

/// Mixed stream of group words and generic N A M (J) automorphisms.
AutMatrix random_automorphism(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_real_distribution<double> pos(0.3, 2.5);
    switch (kind(rng)) {
    case 0: return test::random_group_word(rng).float_cache();
    case 1: {
        const AutParams p{pos(rng), std::polar(1.0, u(rng)), u(rng), {u(rng), u(rng)}};
        return langlands_compose(p);
    }
    default: {
        const AutParams p{pos(rng), std::polar(1.0, u(rng)), u(rng), {u(rng), u(rng)}};
        return langlands_compose(p) * involution_j();
    }
    }
}

} // namespace

TEST_CASE("fractional-linear action") {
    const AutMatrix j = involution_j();
    CHECK(dist(apply(j, {{1, 0}, {0, 2}}), {{0.5, 0}, {0, 0.5}}) <= 1e-15);
    CHECK(dist(apply(j, {{0, 0}, {0, 1}}), {{0, 0}, {0, 1}}) <= 1e-15);
    CHECK(dist(apply(heisenberg({1, 0}, 0), {{0, 0}, {0, 1}}), {{1, 0}, {0, 1.5}}) <= 1e-15);

    AutMatrix corrupt; // zero first row signals garbage input
    CHECK_THROWS_AS(apply(corrupt, PointD2{{0, 0}, {0, 1}}), std::domain_error);
}

TEST_CASE("q form") {
    CHECK(q_form(involution_j(), {{0, 0}, {0, 2}}) == Approx(4.0));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t)
        CHECK(q_form(AutMatrix::identity(), random_interior_point(rng)) == Approx(1.0));
    // G5 is the identity on its fixed line z2 = i z1, where Q(G5) = 1
    const auto& g5 = generators().g[4].float_cache();
    CHECK(q_form(g5, {{0.5, 0}, {0, 0.5}}) == Approx(1.0));
}

TEST_CASE("jacobian determinant") {
    const ComplexF jac = jacobian_det(involution_j(), {{0, 0}, {0, 1}});
    CHECK(std::abs(jac - ComplexF(-1, 0)) <= 1e-15);
    CHECK(std::abs(jacobian_det(AutMatrix::identity(), {{0.3, 0.1}, {0, 2}}) - ComplexF(1, 0)) <=
          1e-15);
}

TEST_CASE("jacobian chain rule") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const AutMatrix g = random_automorphism(rng);
        const AutMatrix h = random_automorphism(rng);
        const PointD2 z = random_interior_point(rng);
        const double lhs = std::abs(jacobian_det(g * h, z));
        const double rhs = std::abs(jacobian_det(g, apply(h, z))) * std::abs(jacobian_det(h, z));
        CHECK(lhs == Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("heisenberg translation") {
    std::mt19937_64 rng(7);
    const AutMatrix id = heisenberg({0, 0}, 0);
    for (int k = 0; k < 9; ++k)
        CHECK(std::abs(id.e[static_cast<std::size_t>(k)] -
                       AutMatrix::identity().e[static_cast<std::size_t>(k)]) <= 1e-15);

    const AutMatrix n = heisenberg({1, 0}, 0);
    CHECK(std::abs(n.at(2, 0) - ComplexF(0, 0.5)) <= 1e-15);
    CHECK(std::abs(n.at(2, 1) - ComplexF(0, 1)) <= 1e-15);
    CHECK(std::abs(n.at(1, 0) - ComplexF(1, 0)) <= 1e-15);

    // action: z2 picks up i z1 conj(gamma)
    const ComplexF gamma{0.7, -0.3};
    const AutMatrix ng = heisenberg(gamma, 0.4);
    for (int t = 0; t < 50; ++t) {
        const PointD2 z = random_interior_point(rng);
        const PointD2 w = apply(ng, z);
        CHECK(std::abs(w.z1 - (z.z1 + gamma)) <= 1e-12);
        const ComplexF expect =
            z.z2 + ComplexF(0.4, 0.5 * std::norm(gamma)) + ComplexF(0, 1) * z.z1 * std::conj(gamma);
        CHECK(std::abs(w.z2 - expect) <= 1e-12);
    }
}

TEST_CASE("dilation") {
    CHECK_THROWS_AS(dilation(0.0), std::invalid_argument);
    CHECK_THROWS_AS(dilation(-2.0), std::invalid_argument);
    for (int k = 0; k < 9; ++k)
        CHECK(std::abs(dilation(1.0).e[static_cast<std::size_t>(k)] -
                       AutMatrix::identity().e[static_cast<std::size_t>(k)]) <= 1e-15);
    const PointD2 w = apply(dilation(std::sqrt(2.0)), {{1, 0}, {0, 1}});
    CHECK(std::abs(w.z1 - ComplexF(std::sqrt(2.0), 0)) <= 1e-12);
    CHECK(std::abs(w.z2 - ComplexF(0, 2)) <= 1e-12);
    CHECK(is_c_unitary(dilation(std::sqrt(2.0))));
}

TEST_CASE("rotation") {
    CHECK_THROWS_AS(rotation({0.5, 0}), std::invalid_argument);
    for (int k = 0; k < 9; ++k)
        CHECK(std::abs(rotation({1, 0}).e[static_cast<std::size_t>(k)] -
                       AutMatrix::identity().e[static_cast<std::size_t>(k)]) <= 1e-15);
    // beta = i acts as z1 -> i^{-3} z1 = i z1
    const PointD2 w = apply(rotation({0, 1}), {{0.5, 0}, {0, 1}});
    CHECK(std::abs(w.z1 - ComplexF(0, 0.5)) <= 1e-12);
    CHECK(std::abs(w.z2 - ComplexF(0, 1)) <= 1e-12);

    // the three cube-root representatives of one rotation act identically
    const double phi = 0.7;
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
        const PointD2 z = random_interior_point(rng);
        const PointD2 a = apply(rotation(std::polar(1.0, -phi / 3)), z);
        for (int k = 1; k < 3; ++k) {
            const PointD2 b =
                apply(rotation(std::polar(1.0, -phi / 3 + 2 * M_PI * k / 3)), z);
            CHECK(dist(a, b) <= 1e-9);
        }
    }
}

TEST_CASE("involution") {
    const AutMatrix j = involution_j();
    const AutMatrix jj = j * j;
    for (int k = 0; k < 9; ++k)
        CHECK(std::abs(jj.e[static_cast<std::size_t>(k)] -
                       AutMatrix::identity().e[static_cast<std::size_t>(k)]) <= 1e-15);
    // J pushes the cusp down: height(J z) = height(z) / |z2|^2
    for (double t : {2.0, 5.0, 50.0}) {
        const PointD2 z({0, 0}, {0, t});
        const PointD2 w = apply(j, z);
        CHECK(std::abs(w.z1) <= 1e-15);
        CHECK(height(w) == Approx(height(z) / std::norm(z.z2)));
    }
}

TEST_CASE("langlands decomposition") {
    const AutParams id = langlands_decompose(AutMatrix::identity());
    CHECK(id.delta == Approx(1.0));
    CHECK(std::abs(id.beta - ComplexF(1, 0)) <= 1e-12);
    CHECK(id.r == Approx(0.0));
    CHECK(std::abs(id.gamma) <= 1e-12);

    // P3 entries as displayed (beta = -1, r = 0)
    AutMatrix p3;
    p3.at(0, 0) = {-1, 0};
    p3.at(1, 0) = {-1, -1};
    p3.at(1, 1) = {1, 0};
    p3.at(2, 0) = {0, -1};
    p3.at(2, 1) = {1, 1};
    p3.at(2, 2) = {-1, 0};
    const AutParams q3 = langlands_decompose(p3);
    CHECK(q3.delta == Approx(1.0));
    CHECK(std::abs(q3.beta - ComplexF(-1, 0)) <= 1e-12);
    CHECK(q3.r == Approx(0.0));
    CHECK(std::abs(q3.gamma - ComplexF(1, 1)) <= 1e-12);

    // P5 entries as displayed (beta = (-1-i)/sqrt2, r = -1)
    const double s2 = std::sqrt(2.0);
    AutMatrix p5;
    p5.at(0, 0) = ComplexF(-1, -1) / 2.0;
    p5.at(1, 0) = {0, 1};
    p5.at(1, 1) = {0, -1};
    p5.at(2, 0) = {1, 0};
    p5.at(2, 1) = {-1, 1};
    p5.at(2, 2) = {-1, -1};
    const AutParams q5 = langlands_decompose(p5);
    CHECK(q5.delta == Approx(s2));
    CHECK(q5.r == Approx(-1.0));
    CHECK(std::norm(q5.gamma) == Approx(2.0));
    CHECK(std::abs(q5.beta - ComplexF(-1, -1) / s2) <= 1e-12);

    // reconstruction is entrywise
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_real_distribution<double> pos(0.3, 2.5);
    for (int t = 0; t < 200; ++t) {
        const AutParams p{pos(rng), std::polar(1.0, u(rng)), u(rng), {u(rng), u(rng)}};
        const AutMatrix m = langlands_compose(p);
        const AutParams back = langlands_decompose(m);
        const AutMatrix m2 = langlands_compose(back);
        for (int k = 0; k < 9; ++k)
            CHECK(std::abs(m.e[static_cast<std::size_t>(k)] - m2.e[static_cast<std::size_t>(k)]) <=
                  1e-9);
    }

    CHECK_THROWS_AS(langlands_decompose(involution_j()), std::invalid_argument);
    AutMatrix degenerate;
    degenerate.at(0, 0) = degenerate.at(1, 1) = 1.0;
    CHECK_THROWS_AS(langlands_decompose(degenerate), std::domain_error);
}

TEST_CASE("njp decomposition") {
    const auto& table = generators();

    // G3: the exact first-row identities give delta^2 = 1, r = 0, gamma = 1+i
    const NjpDecomposition d3 = njp_decompose(table.g[2].exact());
    CHECK(d3.params.delta == Approx(1.0));
    CHECK(d3.params.r == Approx(0.0));
    CHECK(std::abs(d3.params.gamma - ComplexF(1, 1)) <= 1e-12);

    // G1 = J = I * J * I
    const NjpDecomposition d1 = njp_decompose(table.g[0].exact());
    CHECK(d1.params.delta == Approx(1.0));
    CHECK(d1.params.r == Approx(0.0));
    CHECK(std::abs(d1.params.gamma) <= 1e-12);
    for (int k = 0; k < 9; ++k) {
        CHECK(std::abs(d1.n.e[static_cast<std::size_t>(k)] -
                       AutMatrix::identity().e[static_cast<std::size_t>(k)]) <= 1e-12);
        CHECK(std::abs(d1.p.e[static_cast<std::size_t>(k)] -
                       AutMatrix::identity().e[static_cast<std::size_t>(k)]) <= 1e-12);
    }

    // dilation parameter sqrt(2) for G5..G8
    for (int j = 4; j < 8; ++j) {
        const NjpDecomposition d = njp_decompose(table.g[static_cast<std::size_t>(j)].exact());
        CHECK(d.params.delta == Approx(std::sqrt(2.0)));
    }

    // recomposition N J P reproduces the action
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const PicardElement w = test::random_group_word(rng);
        if (w.exact().at(0, 2).is_zero()) continue;
        const NjpDecomposition d = njp_decompose(w.exact());
        const AutMatrix njp = d.n * involution_j() * d.p;
        const PointD2 z = random_interior_point(rng);
        CHECK(dist(apply(njp, z), apply(w.float_cache(), z)) <= 1e-9 * std::max(1.0, std::abs(z.z2)));

        // integrality of the extracted parameters
        const double d2 = d.params.delta * d.params.delta;
        CHECK(std::abs(d2 - std::round(d2)) <= 1e-9);
        CHECK(std::abs(d.params.r - std::round(d.params.r)) <= 1e-9);
        const double gn2 = 0.5 * std::norm(d.params.gamma);
        CHECK(std::abs(gn2 - std::round(gn2)) <= 1e-9);
        CHECK(std::abs(d2 * d.params.gamma.real() - std::round(d2 * d.params.gamma.real())) <= 1e-9);
        CHECK(std::abs(d2 * d.params.gamma.imag() - std::round(d2 * d.params.gamma.imag())) <= 1e-9);
    }

    // error paths
    CHECK_THROWS_AS(njp_decompose(heisenberg_exact({1, 1}, 0)), std::domain_error);
    ExactMatrix3 corrupt = table.g[2].exact();
    corrupt.at(1, 0) = corrupt.at(1, 0) + GaussianInt{1, 0};
    CHECK_THROWS_AS(njp_decompose(corrupt), std::invalid_argument);
}

TEST_CASE("height cocycle and jacobian law") {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 1000; ++t) {
        const AutMatrix g = random_automorphism(rng);
        const PointD2 z = random_interior_point(rng);
        const double q = q_form(g, z);
        CHECK(height(apply(g, z)) * q == Approx(height(z)).epsilon(1e-9));
        CHECK(std::norm(jacobian_det(g, z)) * q * q * q == Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("action is a homomorphism") {
    std::mt19937_64 rng(27);
    for (int t = 0; t < 300; ++t) {
        const AutMatrix g = random_automorphism(rng);
        const AutMatrix h = random_automorphism(rng);
        const PointD2 z = random_interior_point(rng);
        const PointD2 a = apply(g * h, z);
        const PointD2 b = apply(g, apply(h, z));
        CHECK(dist(a, b) <= 1e-9 * std::max(1.0, std::abs(b.z2)));
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "picard/domain.hpp"
#include "picard/reduction.hpp"
#include "test_util.hpp"

using namespace picard;
using doctest::Approx;

namespace {

double dist(const PointD2& a, const PointD2& b) {
    return std::abs(a.z1 - b.z1) + std::abs(a.z2 - b.z2);
}

} // namespace

TEST_CASE("cusp normalization examples") {
    // pure lattice translation: N_{(1+i, 1+i)}(0, 2i) = (1+i, 1+3i) undone
    const PointD2 moved{{1, 1}, {1, 3}};
    auto [p, z] = normalize_cusp(moved);
    CHECK(std::abs(z.z1) <= 1e-12);
    CHECK(std::abs(z.z2 - ComplexF(0, 2)) <= 1e-12);
    CHECK(height(z) == Approx(height(moved)));
    CHECK(is_stabilizer_infinity(p.exact()));

    // already normalized: P = identity
    const PointD2 home{{0.3, 0.2}, {0.1, 1.5}};
    auto [pid, zid] = normalize_cusp(home);
    CHECK(pid == PicardElement::identity_element());
    CHECK(dist(zid, home) <= 1e-15);

    // rotation case: z1 = 0.9 + 0.9i needs translate + rotate
    const PointD2 rot{{0.9, 0.9}, {0, 3}};
    auto [pr, zr] = normalize_cusp(rot);
    CHECK(in_triangle_delta(zr.z1));
    CHECK(std::abs(zr.z1 - ComplexF(0.1, 0.1)) <= 1e-12);
    CHECK(std::abs(zr.z2.real()) <= 0.5 + 1e-12);
    CHECK(height(zr) == Approx(height(rot)));
}

TEST_CASE("cusp normalization properties") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 500; ++t) {
        const PointD2 z = random_interior_point(rng);
        auto [p, w] = normalize_cusp(z);
        CHECK(is_stabilizer_infinity(p.exact()));
        CHECK(in_triangle_delta(w.z1));
        CHECK(std::abs(w.z2.real()) <= 0.5 + 1e-9);
        CHECK(height(w) == Approx(height(z)).epsilon(1e-12));
        CHECK(dist(apply(p.float_cache(), z), w) <= 1e-9 * std::max(1.0, std::abs(z.z2)));
    }
}

TEST_CASE("reduction examples") {
    // already reduced
    const ReductionResult r0 = reduce({{0, 0}, {0, 2}});
    CHECK(r0.iterations == 0);
    CHECK(r0.g == PicardElement::identity_element());
    CHECK(dist(r0.reduced, {{0, 0}, {0, 2}}) <= 1e-12);

    // one inversion through J
    const ReductionResult r1 = reduce({{0, 0}, {0, 0.5}});
    CHECK(r1.iterations == 1);
    CHECK(r1.g == PicardElement::from_exact(involution_j_exact()));
    CHECK(dist(r1.reduced, {{0, 0}, {0, 2}}) <= 1e-12);

    // translated point comes back with zero inversions
    const ReductionResult r2 = reduce({{1, 1}, {1, 3}});
    CHECK(r2.iterations == 0);
    CHECK(dist(r2.reduced, {{0, 0}, {0, 2}}) <= 1e-12);
}

TEST_CASE("reduction of random points") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 1000; ++t) {
        const PointD2 z = random_interior_point(rng, 1e-3, 1e3);
        const ReductionResult res = reduce(z);
        const MembershipReport rep = in_fundamental_domain(res.reduced, kDefaultTol);
        CHECK(rep.in_set);
        CHECK(res.iterations <= 200);
        const double scale = std::max(1.0, std::abs(res.reduced.z2));
        CHECK(dist(apply(res.g.float_cache(), z), res.reduced) <= 1e-9 * scale);
        // strict height increase at every inversion
        REQUIRE(res.height_trace.size() == static_cast<std::size_t>(res.iterations) + 1);
        for (std::size_t i = 0; i + 1 < res.height_trace.size(); ++i)
            CHECK(res.height_trace[i + 1] > res.height_trace[i]);
    }
}

TEST_CASE("nontermination carries the trace") {
    CHECK_THROWS_AS(reduce({{0, 0}, {0, 1e-3}}, kDefaultTol, 0), reduction_error);
    try {
        reduce({{0, 0}, {0, 1e-3}}, kDefaultTol, 0);
    } catch (const reduction_error& e) {
        CHECK(e.height_trace.size() == 1);
    }
}

TEST_CASE("orbit canonicalization example") {
    const PicardElement h =
        generators().g[2] * PicardElement::from_exact(heisenberg_exact({1, 1}, 1));
    CHECK(canonicalize_pair_check({{0.1, 0.1}, {0.2, 1.7}}, h));
    CHECK(canonicalize_pair_check({{0.1, 0.1}, {0.2, 1.7}}, PicardElement::identity_element()));
}

TEST_CASE("orbit canonicalization on random words") {
    std::mt19937_64 rng(55);
    int agree = 0, total = 0;
    for (int t = 0; t < 500; ++t) {
        const PointD2 z = random_interior_point(rng, 0.05, 50.0);
        const PicardElement h = test::random_group_word(rng);
        ++total;
        if (canonicalize_pair_check(z, h)) {
            ++agree;
        } else {
            // disagreement is only legitimate next to a face
            const ReductionResult res = reduce(z);
            double closest = 1e9;
            const MembershipReport rep = in_fundamental_domain(res.reduced);
            for (double m : rep.prism_margins) closest = std::min(closest, std::abs(m));
            for (double m : rep.q_margins) closest = std::min(closest, std::abs(m));
            CHECK(closest <= 1e-4);
        }
    }
    CHECK(agree >= total * 99 / 100);
}

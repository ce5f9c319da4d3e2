#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tanglekit/abc_core.hpp"
#include "tanglekit/rng.hpp"

using namespace tanglekit;

namespace {

invariant_triple random_triple(std::uint64_t seed)
{
    gaussian_stream g(seed);
    return {g.cgauss(), g.cgauss(), g.cgauss()};
}

} // namespace

TEST_CASE("I1 and I2 are invariant under the one-parameter transform")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        gaussian_stream g(1000 + seed);
        invariant_triple t = random_triple(seed);
        cplx x = g.cgauss();
        invariant_triple u = transform(t, x);
        CHECK(std::abs(i1(u) - i1(t)) < 1e-12);
        CHECK(std::abs(i2(u) - i2(t)) < 1e-12);
    }
}

TEST_CASE("transform composes like a group action at x = 0")
{
    invariant_triple t = random_triple(5);
    invariant_triple u = transform(t, 0.0);
    CHECK(std::abs(u.a - t.a) < 1e-15);
    CHECK(std::abs(u.b - t.b) < 1e-15);
    CHECK(std::abs(u.c - t.c) < 1e-15);
}

TEST_CASE("x0_root kills the A entry on both branches")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        invariant_triple t = random_triple(40 + seed);
        auto [x1, x2] = x0_root(t);
        CHECK(std::abs(transform(t, x1).a) < 1e-10);
        CHECK(std::abs(transform(t, x2).a) < 1e-10);
    }
}

TEST_CASE("x0_root refuses a degenerate quadratic")
{
    invariant_triple t{cplx(1, 0), cplx(0.5, 0), cplx(0, 0)};
    CHECK_THROWS_AS(x0_root(t), degenerate_c_error);
}

TEST_CASE("tau_upper is nonnegative and transform-invariant")
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        invariant_triple t = random_triple(90 + seed);
        double b = tau_upper(t);
        CHECK(b >= 0.0);
        gaussian_stream g(500 + seed);
        CHECK(std::abs(tau_upper(transform(t, g.cgauss())) - b) < 1e-11);
    }
}

TEST_CASE("known triple values")
{
    // the (0, 1/2, 0) row of a GHZ state
    invariant_triple ghz{0.0, 0.5, 0.0};
    CHECK(i1(ghz) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(i2(ghz) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(tau_upper(ghz) == doctest::Approx(0.0).epsilon(1e-15)); // no two-tangle at all

    // a Bell-like row: A dominates, discriminant vanishes
    invariant_triple bell{0.5, 0.0, 0.0};
    CHECK(i1(bell) == doctest::Approx(0.25));
    CHECK(i2(bell) == doctest::Approx(0.0));
    CHECK(tau_upper(bell) == doctest::Approx(1.0));
}

TEST_CASE("amplitude bound holds along the whole orbit")
{
    // 2(|A(x)| + |C(x)|) >= sqrt(4 I1 - 2 I2) for every x
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        invariant_triple t = random_triple(700 + seed);
        double rhs = std::sqrt(std::max(0.0, tau_upper(t)));
        gaussian_stream g(800 + seed);
        for (int k = 0; k < 25; ++k) {
            invariant_triple u = transform(t, g.cgauss());
            CHECK(2.0 * (std::abs(u.a) + std::abs(u.c)) >= rhs - 1e-6);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tanglekit/fonts.hpp"
#include "tanglekit/qstate.hpp"

using namespace tanglekit;

namespace {

pure_state ghz(int n)
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1 << n);
    v[0] = 1.0;
    v[(1 << n) - 1] = 1.0;
    return make_pure(v, n);
}

pure_state w3()
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v[1] = v[2] = v[4] = 1.0;
    return make_pure(v, 3);
}

double sum_abs2_4(const font_set4& f)
{
    double s = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            s += std::norm(f.d2_12[i][j]) + std::norm(f.d2_13[i][j]) + std::norm(f.d2_14[i][j]) +
                 std::norm(f.d3_s4[i][j]) + std::norm(f.d3_s3[i][j]) + std::norm(f.d3_s2[i][j]) +
                 std::norm(f.d4[i][j]);
    return s;
}

} // namespace

TEST_CASE("GHZ4 determinants: only the all-flip diagonal entry survives")
{
    font_set4 f = fonts4(ghz(4));
    CHECK(std::abs(f.d4[0][0] - 0.5) < 1e-15);
    double rest = sum_abs2_4(f) - std::norm(f.d4[0][0]);
    CHECK(rest < 1e-28);
    CHECK(one_tangle_font_sum(f) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("GHZ3 determinants")
{
    font_set3 f = fonts3(ghz(3));
    CHECK(std::abs(f.d3[0] - 0.5) < 1e-15);
    CHECK(std::abs(f.d3[1]) < 1e-15);
    CHECK(std::abs(f.d2_12[0]) + std::abs(f.d2_12[1]) < 1e-15);
    CHECK(std::abs(f.d2_13[0]) + std::abs(f.d2_13[1]) < 1e-15);
    CHECK(one_tangle_font_sum(f) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("W3 determinants: only two-way entanglement")
{
    font_set3 f = fonts3(w3());
    CHECK(std::abs(f.d2_12[0] + 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(f.d2_12[1]) < 1e-15);
    CHECK(std::abs(f.d2_13[0] + 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(f.d2_13[1]) < 1e-15);
    CHECK(std::abs(f.d3[0]) + std::abs(f.d3[1]) < 1e-15);
    CHECK(one_tangle_font_sum(f) == doctest::Approx(8.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("determinant sum reproduces the one-tangle on random states")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        pure_state s4 = random_state(4, 100 + seed);
        CHECK(std::abs(one_tangle_font_sum(fonts4(s4)) - one_tangle(s4, 1)) < 1e-12);
        pure_state s3 = random_state(3, 200 + seed);
        CHECK(std::abs(one_tangle_font_sum(fonts3(s3)) - one_tangle(s3, 1)) < 1e-12);
    }
}

TEST_CASE("fonts reject wrong qubit counts")
{
    CHECK_THROWS_AS(fonts4(ghz(3)), dimension_error);
    CHECK_THROWS_AS(fonts3(ghz(4)), dimension_error);
}

TEST_CASE("product states have no surviving determinants")
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
    v[0b0110] = 1.0;
    font_set4 f = fonts4(make_pure(v, 4));
    CHECK(sum_abs2_4(f) == 0.0);
}

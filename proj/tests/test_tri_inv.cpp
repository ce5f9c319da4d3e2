#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tanglekit/rng.hpp"
#include "tanglekit/tri_inv.hpp"

using namespace tanglekit;

namespace {

pure_state ghz3()
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v[0] = v[7] = 1.0;
    return make_pure(v, 3);
}

pure_state w3()
{
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v[1] = v[2] = v[4] = 1.0;
    return make_pure(v, 3);
}

pure_state rotated(const pure_state& s, std::uint64_t seed)
{
    gaussian_stream g(seed);
    pure_state out = s;
    for (int q = 1; q <= s.n; ++q) {
        out = apply_local_unitary(out, u_of_x(g.cgauss(), q));
        // add a phase so the orbit is generic
        local_unitary ph;
        ph.target = q;
        double a = 6.283185307179586 * g.uniform();
        ph.u << cplx(std::cos(a), std::sin(a)), 0, 0, 1;
        out = apply_local_unitary(out, ph);
    }
    return out;
}

} // namespace

TEST_CASE("pair rows of the GHZ and W states")
{
    invariant_triple g12 = pair_triple(ghz3(), tri_pair::a1a2);
    CHECK(std::abs(g12.a) < 1e-15);
    CHECK(std::abs(g12.b - 0.5) < 1e-15);
    CHECK(std::abs(g12.c) < 1e-15);

    invariant_triple w12 = pair_triple(w3(), tri_pair::a1a2);
    CHECK(std::abs(w12.a + 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(w12.b) < 1e-15);
    CHECK(std::abs(w12.c) < 1e-15);
}

TEST_CASE("three-tangle of the standard states")
{
    CHECK(three_tangle_pure(ghz3()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(three_tangle_pure(w3()) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(i34_value(ghz3()) - 0.25) < 1e-15);
}

TEST_CASE("both pair rows share one discriminant")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        pure_state s = random_state(3, 300 + seed);
        invariant_triple r12 = pair_triple(s, tri_pair::a1a2);
        invariant_triple r13 = pair_triple(s, tri_pair::a1a3);
        cplx d12 = r12.b * r12.b - 4.0 * r12.a * r12.c;
        cplx d13 = r13.b * r13.b - 4.0 * r13.a * r13.c;
        CHECK(std::abs(d12 - d13) < 1e-13);
        CHECK(std::abs(d12 - i34_value(s)) < 1e-13);
    }
}

TEST_CASE("three-tangle is a local-unitary invariant")
{
    pure_state s = random_state(3, 9);
    double t = three_tangle_pure(s);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
        CHECK(three_tangle_pure(rotated(s, seed)) == doctest::Approx(t).epsilon(1e-11));
}

TEST_CASE("full report satisfies the residual-tangle identity")
{
    tri_report w = ckw_report(w3());
    CHECK(w.one_tangle == doctest::Approx(8.0 / 9.0).epsilon(1e-12));
    CHECK(w.two_tangle_12 == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(w.two_tangle_13 == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(w.three_tangle == doctest::Approx(0.0).epsilon(1e-12));

    tri_report g = ckw_report(ghz3());
    CHECK(g.one_tangle == doctest::Approx(1.0));
    CHECK(g.two_tangle_12 == doctest::Approx(0.0));
    CHECK(g.three_tangle == doctest::Approx(1.0));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        tri_report r = ckw_report(random_state(3, 400 + seed));
        double resid = r.one_tangle - r.two_tangle_12 * r.two_tangle_12 -
                       r.two_tangle_13 * r.two_tangle_13 - r.three_tangle;
        CHECK(std::abs(resid) < 1e-9);
    }
}

TEST_CASE("the two row norms saturate against the shared tangles")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        pure_state s = random_state(3, 500 + seed);
        tri_report r = ckw_report(s);
        CHECK(std::abs(4.0 * r.n_a3 -
                       (r.two_tangle_12 * r.two_tangle_12 + 0.5 * r.three_tangle)) < 1e-9);
        CHECK(std::abs(4.0 * r.n_a2 -
                       (r.two_tangle_13 * r.two_tangle_13 + 0.5 * r.three_tangle)) < 1e-9);
    }
}

TEST_CASE("canonical form: structure and invariants")
{
    canonical_result g = canonical_form(ghz3());
    CHECK(g.already_canonical);
    CHECK((g.u3.u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        pure_state s = random_state(3, 600 + seed);
        canonical_result c = canonical_form(s);

        // support lies in {000, 001, 011, 101, 111}
        CHECK(std::abs(c.state.amps[0b010]) < 1e-10);
        CHECK(std::abs(c.state.amps[0b100]) < 1e-10);
        CHECK(std::abs(c.state.amps[0b110]) < 1e-10);

        // applying the three unitaries reproduces the canonical state
        pure_state again = apply_local_unitary(s, c.u3);
        again = apply_local_unitary(again, c.u1);
        again = apply_local_unitary(again, c.u2);
        CHECK((again.amps - c.state.amps).norm() < 1e-12);

        // in canonical form the residual invariant collapses onto |T12|
        double t3 = three_tangle_pure(c.state);
        double t12 = std::abs(t12_value(c.state));
        double t13 = std::abs(t13_value(c.state));
        CHECK(std::abs(4.0 * t12 * t12 - t3) < 1e-10);
        CHECK(std::abs(t12 - t13) < 1e-10);
    }
}

TEST_CASE("closed-form root drives T12 to zero on generic states")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        pure_state s = random_state(3, 700 + seed);
        auto u = t12_kill_root(s, 1);
        REQUIRE(u.has_value());
        CHECK(std::abs(t12_value(apply_local_unitary(s, *u))) < 1e-9);
    }
}

TEST_CASE("closed-form root degenerates persistently on the GHZ orbit")
{
    CHECK_FALSE(t12_kill_root(ghz3(), 1).has_value());
    CHECK_FALSE(t12_kill_root(ghz3(), 99).has_value());
}

TEST_CASE("robust T12 zeroing covers the GHZ orbit and product states")
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        pure_state s = random_state(3, 800 + seed);
        local_unitary u = zero_T12_unitary(s);
        CHECK(std::abs(t12_value(apply_local_unitary(s, u))) < 1e-9);
    }

    local_unitary g = zero_T12_unitary(ghz3());
    CHECK(std::abs(t12_value(apply_local_unitary(ghz3(), g))) < 1e-9);

    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
    v[1] = 1.0; // |001>, T12 already zero
    pure_state prod = make_pure(v, 3);
    local_unitary id = zero_T12_unitary(prod);
    CHECK((id.u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("dc distance matches its definition")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        pure_state s = random_state(3, 900 + seed);
        double t12 = std::abs(t12_value(s));
        CHECK(std::abs(dc_distance(s) - (three_tangle_pure(s) - 4.0 * t12 * t12)) < 1e-12);
    }
}

// Grids, potentials, factorization and channel bookkeeping.

#include "doctest.h"
#include "floquet/domain.hpp"

#include <cmath>
#include <random>

using namespace flq;

TEST_SUITE("domain") {

TEST_CASE("grid weights integrate polynomials over the ball") {
    const SpatialGrid g = build_grid(3.0, 10, 7);
    CHECK(g.size() == 10 * 26);
    double vol = 0.0, r2 = 0.0, z2 = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        vol += g.weights[i];
        r2 += g.weights[i] * g.points[i].squaredNorm();
        z2 += g.weights[i] * g.points[i].z() * g.points[i].z();
    }
    CHECK(vol == doctest::Approx(4.0 * kPi * 27.0 / 3.0).epsilon(1e-12));
    CHECK(r2 == doctest::Approx(4.0 * kPi * std::pow(3.0, 5) / 5.0).epsilon(1e-12));
    CHECK(z2 == doctest::Approx(r2 / 3.0).epsilon(1e-12));
    CHECK(g.point(27).norm() == doctest::Approx(g.radius(27)));
}

TEST_CASE("grid construction rejects bad input") {
    CHECK_THROWS_AS(build_grid(0.0, 10, 7), Error);
    CHECK_THROWS_AS(build_grid(3.0, 2, 7), Error);
    CHECK_THROWS_AS(build_grid(3.0, 10, 8), Error);
    CHECK(build_grid(3.0, 10, 7).hash() == build_grid(3.0, 10, 7).hash());
    CHECK(build_grid(3.0, 10, 7).hash() != build_grid(3.0, 12, 7).hash());
}

TEST_CASE("presets are real and synthesize the documented time dependence") {
    for (const auto& name : preset_names()) {
        const PotentialSpec p = preset_potential(name);
        const SpatialGrid g = build_grid(4.0, 6, 5);
        CHECK(reality_violation(sample_potential(p, g)) < 1e-14);
    }
    const PotentialSpec d = preset_potential("driven-gaussian");
    const Vec3 x(0.3, 0.2, -0.4);
    for (double t : {0.0, 1.1, 2.7}) {
        const double expect = -0.8 * (1.0 + 0.5 * std::cos(t)) * std::exp(-x.squaredNorm());
        CHECK(d.value(t, x) == doctest::Approx(expect).epsilon(1e-13));
    }
    CHECK(preset_potential("zero").empty());
    CHECK_THROWS_AS(preset_potential("nonsense"), Error);
}

TEST_CASE("scaling a potential is linear") {
    const PotentialSpec p = preset_potential("two-mode");
    const PotentialSpec q = p.scaled(0.25);
    for (double r : {0.1, 0.9, 2.0})
        for (int m : p.mode_list()) CHECK(std::abs(q.mode_value(m, r) - 0.25 * p.mode_value(m, r)) < 1e-15);
    CHECK(p.max_mode() == 2);
}

TEST_CASE("factorization reproduces the potential") {
    const SpatialGrid g = build_grid(5.0, 8, 7);
    for (const char* name : {"yukawa", "driven-gaussian", "two-mode"}) {
        const FourierPotential V = sample_potential(preset_potential(name), g);
        const FactorizedPotential F = factorize(V, g);
        CHECK(F.sample_residual < 1e-10);
        CHECK(F.truncation_residual < 1e-3);
        const auto prod = F.product_modes();
        for (const auto& [m, v] : V.modes) {
            REQUIRE(prod.count(m));
            CHECK((prod.at(m) - v).cwiseAbs().maxCoeff() < 1e-3 * (1.0 + v.cwiseAbs().maxCoeff()));
        }
    }
    const FourierPotential Z = sample_potential(preset_potential("zero"), g);
    CHECK(factorize(Z, g).is_zero());
}

TEST_CASE("factorization rejects complex potentials") {
    const SpatialGrid g = build_grid(3.0, 6, 5);
    PotentialSpec p = preset_potential("driven-gaussian");
    p.modes[0].amplitude = cplx(0.0, 1.0);  // V_{-1} no longer conj(V_1)
    CHECK_THROWS_AS(factorize(sample_potential(p, g), g), Error);
}

TEST_CASE("channel sets split open and closed channels") {
    const ChannelSet c = channel_set(2.6, 3);
    CHECK(c.count() == 7);
    CHECK(c.open == std::vector<int>{-3, -2, -1, 0, 1, 2});
    CHECK(c.closed == std::vector<int>{3});
    CHECK(c.n_floor == 2);
    CHECK(c.kappa(2) == doctest::Approx(std::sqrt(0.6)));
    CHECK(c.momentum(3).imag() == doctest::Approx(std::sqrt(0.4)));
    CHECK(c.momentum(3).real() == doctest::Approx(0.0));
    CHECK_THROWS_AS(c.kappa(3), Error);
    CHECK_THROWS_AS(channel_set(2.0, 3), Error);
    CHECK_THROWS_AS(channel_set(2.5, 0), Error);
    const ChannelSet w = channel_window(-0.4, -2, 1);
    CHECK(w.open == std::vector<int>{-2, -1});
}

TEST_CASE("branch of the square root has non-negative imaginary part") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        const cplx z(u(rng), u(rng));
        const cplx s = sqrt_branch(z);
        CHECK(s.imag() >= 0.0);
        CHECK(std::abs(s * s - z) < 1e-12 * (1.0 + std::abs(z)));
    }
    CHECK(sqrt_branch(cplx(-4.0, 0.0)) == cplx(0.0, 2.0));
}

} // TEST_SUITE

// Moment parameters, extrapolation, the pairing integral and reconstruction I/O.

#include "doctest.h"
#include "floquet/inversion.hpp"

#include <cmath>
#include <filesystem>
#include <random>

using namespace flq;

TEST_SUITE("inversion") {

TEST_CASE("moment parameters satisfy the complex-momentum constraints") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        const Vec3 k(u(rng), u(rng), u(rng));
        const double lambda = 0.37;
        const int m1 = 0, m2 = trial % 3 - 1;
        const double rho = admissible_rho(rho_min(k, lambda, m1, m2) + 2.0 + 0.1 * trial, lambda, -1, 1);
        const MomentQuery q = moment_params(k, lambda, m1, m2, rho);
        CHECK(std::abs(q.nu.dot(k)) < 1e-10);
        CHECK(std::abs(q.omega.dot(k)) < 1e-10);
        CHECK(std::abs(q.nu.dot(q.omega)) < 1e-12);
        // p.p = lambda - m for both complex momenta
        CHECK(std::abs(q.first.p_dot_p() - (lambda - m1)) < 1e-10 * rho * rho);
        CHECK(std::abs(q.second.p_dot_p() - (lambda - m2)) < 1e-10 * rho * rho);
        CHECK((q.first.p_perp - q.second.p_perp - q.pairing_vector()).norm() < 1e-12 * (1.0 + rho));
    }
}

TEST_CASE("moment parameter errors") {
    const Vec3 k(4.0, 0.0, 0.0);
    CHECK(rho_min(k, 0.37, 0, 0) == doctest::Approx(std::sqrt(4.0 - 0.37)));
    CHECK(rho_min(Vec3::Zero(), 0.37, 0, 0) == 0.0);
    try {
        moment_params(k, 0.37, 0, 0, 1.0);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
    try {
        moment_params(Vec3::Zero(), 0.75, 0, 0, 1.5);  // rho^2 + lambda = 3
        FAIL("expected an exceptional-parameter error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Exceptional);
    }
    const double r = admissible_rho(1.5, 0.75, 0, 0);
    CHECK(r >= 1.5);
    CHECK_NOTHROW(moment_params(Vec3::Zero(), 0.75, 0, 0, r));
    CHECK_THROWS_AS(moment_params(Vec3(1, 0, 0), 0.37, 0, 0, 3.0, std::make_pair(Vec3(1, 0, 0), Vec3(0, 1, 0))),
                    Error);
}

TEST_CASE("Richardson extrapolation is exact for quadratics in 1/rho") {
    const std::vector<double> rho{4.0, 8.0, 16.0, 32.0};
    std::vector<cplx> s;
    const cplx c0(1.5, -0.5), c1(0.3, 0.2), c2(-2.0, 1.0);
    for (double r : rho) s.push_back(c0 + c1 / r + c2 / (r * r));
    CHECK(std::abs(richardson_limit(rho, s, 2) - c0) < 1e-12);
    // first order removes the 1/rho term only
    CHECK(std::abs(richardson_limit(rho, s, 1) - c0) < std::abs(c2) / (16.0 * 32.0) * 1.01);
}

TEST_CASE("k lattice and reachable ball") {
    const KLattice lat{3.0, 9};
    const auto pts = lat.points();
    CHECK(pts.size() == 729);
    CHECK(lat.spacing() == doctest::Approx(0.75));
    CHECK(k_reachable(Vec3(1, 0, 0), 0.37, 0, 1, {4.0, 8.0}));
    CHECK_FALSE(k_reachable(Vec3(12, 0, 0), 0.37, 0, 1, {4.0, 8.0}));
    CHECK_FALSE(k_reachable(Vec3(1, 0, 0), 0.37, 0, 1, {}));
}

TEST_CASE("Born moment of a Gaussian") {
    const SpatialGrid g = build_grid(7.0, 30, 17);
    const FourierPotential V = sample_potential(preset_potential("born-gaussian"), g);
    const Vec3 k(0.5, -0.25, 0.75);
    // V_1(x) = -0.015 e^{-|x|^2 / 2.25}: 2 pi int e^{ik.x} V_1 = 2 pi (-0.015) (pi 2.25)^{3/2} e^{-2.25 k^2 / 4}
    const cplx exact = 2.0 * kPi * (-0.015) * std::pow(kPi * 2.25, 1.5) * std::exp(-2.25 * k.squaredNorm() / 4.0);
    CHECK(std::abs(born_moment(g, V, k, 0, 1) - exact) < 1e-8 * std::abs(exact));
    CHECK(std::abs(born_moment(g, V, k, 1, 0) - exact) < 1e-8 * std::abs(exact));
}

TEST_CASE("moment engine reproduces the direct CGO pairing") {
    const SpatialGrid g = build_grid(4.0, 10, 11);
    const FourierPotential V = sample_potential(preset_potential("born-gaussian"), g);
    const FactorizedPotential F = factorize(V, g);
    const double lambda = 0.37;
    const MomentQuery q = moment_params(Vec3(0.75, -1.5, 0.75), lambda, 0, 1, 4.0);
    CgoOptions opt;
    opt.krule.K = 5.0;
    opt.max_weak_residual = 1.0;
    const MomentValue d = moment_integral(g, F, q, opt);
    MomentEngine engine(g, F, lambda, opt);
    const MomentValue e = engine.integral(q);
    // the engine rotates a canonical solution; the residual gap is the rotation
    // non-invariance of the angular rule and shrinks with its degree
    CHECK(std::abs(d.value - e.value) < 2e-4 * std::abs(d.value));
    // weak potential: close to the Born value already at moderate rho
    const cplx b = born_moment(g, V, q.k, 0, 1);
    CHECK(std::abs(e.value - b) < 0.2 * std::abs(b));
    CHECK(engine.solves() == 1);
}

TEST_CASE("relative mode error") {
    const SpatialGrid g = build_grid(3.0, 6, 5);
    std::map<int, CVec> a, t;
    t[0] = CVec::Ones(g.size());
    a[0] = 1.1 * CVec::Ones(g.size());
    CHECK(relative_mode_error(g, a, t, {0}) == doctest::Approx(0.1));
    CHECK(relative_mode_error(g, {}, t, {0}) == doctest::Approx(1.0));
}

TEST_CASE("reconstruction CSV round trip") {
    RecoveredPotential r;
    r.rho_list = {4.0, 8.0, 16.0};
    r.relative_l2_error = 0.054;
    r.hermitian_defect = 1e-3;
    r.cgo_solves = 6;
    r.skipped = 1;
    r.samples.push_back({Vec3(0.75, 0.0, -1.5), 1, cplx(0.125, -3.0e-4), false, false});
    r.samples.push_back({Vec3(0.0, 0.0, 0.0), 0, cplx(-1.0 / 3.0, 0.0), true, false});
    r.samples.push_back({Vec3(3.0, 3.0, 3.0), -1, cplx(0.0, 0.0), false, true});
    const std::string path = (std::filesystem::temp_directory_path() / "floquet_unit_rec.csv").string();
    write_reconstruction_csv(path, r);
    const RecoveredPotential s = read_reconstruction_csv(path);
    std::filesystem::remove(path);
    REQUIRE(s.samples.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK((s.samples[i].k - r.samples[i].k).norm() == 0.0);
        CHECK(s.samples[i].mode == r.samples[i].mode);
        CHECK(s.samples[i].value == r.samples[i].value);
        CHECK(s.samples[i].low_confidence == r.samples[i].low_confidence);
        CHECK(s.samples[i].skipped == r.samples[i].skipped);
    }
    CHECK(s.rho_list == r.rho_list);
    CHECK(s.relative_l2_error == r.relative_l2_error);
    CHECK(s.cgo_solves == 6);
    CHECK(s.skipped == 1);
}

} // TEST_SUITE

// Faddeev Green operators: agreement of the two discretizations, parameter
// checks, boundary values and CGO solutions.

#include "doctest.h"
#include "floquet/faddeev.hpp"

#include <cmath>
#include <random>

using namespace flq;

TEST_SUITE("faddeev") {

TEST_CASE("direct and split routes agree off the real axis") {
    const GaussianSource f{Vec3(0.2, -0.1, 0.3), 1.2, 1.0};
    const std::vector<Vec3> pts{Vec3(0, 0, 0), Vec3(0.5, 0.3, -0.4), Vec3(-1, 0.5, 1.0)};
    KRuleOptions kopt;
    kopt.K = 8.0;
    kopt.extent = 6.0;
    for (cplx z : {cplx(0.0, 1.0), cplx(0.0, 2.5), cplx(0.4, -0.8)}) {
        FaddeevParams q;
        q.p_perp = Vec3(1.0, 0.0, 0.0);
        q.z = z;
        const CVec d = faddeev_direct_at(q, f, pts, kopt);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const cplx s = faddeev_split_at(q, f, pts[i]).total();
            CHECK(std::abs(d[static_cast<Eigen::Index>(i)] - s) < 1e-7 * std::abs(s));
        }
    }
}

TEST_CASE("grid operator matches the analytic-source evaluation") {
    const SpatialGrid g = build_grid(6.0, 20, 15);
    const GaussianSource f{Vec3(0, 0, 0), 1.0, 1.0};
    CVec fv(g.size());
    for (int j = 0; j < g.size(); ++j) fv[j] = f.value(g.points[j]);
    FaddeevParams q;
    q.p_perp = Vec3(0.0, 1.3, 0.0);
    q.z = cplx(0.0, 1.5);
    KRuleOptions kopt;
    kopt.K = 7.0;
    const FaddeevOperator op(g, q, kopt);
    const std::vector<Vec3> pts{Vec3(0.1, 0.2, 0.3), Vec3(-0.7, 0.0, 0.4)};
    const CVec a = op.apply_to_points(fv, pts);
    const CVec b = faddeev_direct_at(q, f, pts, kopt);
    CHECK((a - b).norm() < 1e-4 * b.norm());
}

TEST_CASE("Gaussian source transform") {
    const GaussianSource f{Vec3(0.3, 0.0, -0.2), 0.9, cplx(0.0, 2.0)};
    // direct quadrature of (2 pi)^{-3/2} int e^{-ik.x} f(x) dx on a fine grid
    const SpatialGrid g = build_grid(7.0, 40, 21);
    const Vec3 k(0.4, -0.3, 1.0);
    cplx acc = 0.0;
    for (int j = 0; j < g.size(); ++j) acc += g.weights[j] * std::exp(-kI * k.dot(g.points[j])) * f.value(g.points[j]);
    acc *= std::pow(2.0 * kPi, -1.5);
    CHECK(std::abs(acc - f.fourier(k)) < 1e-9);
}

TEST_CASE("parameter validation and the excluded set") {
    FaddeevParams q;
    q.p_perp = Vec3(0.5, 0.0, 0.1);  // not orthogonal to nu = e_z
    CHECK_THROWS_AS(validate_params(q), Error);
    q.p_perp = Vec3(1.5, 0.0, 0.0);
    q.gamma = -0.25;  // p_perp^2 + gamma = 2
    try {
        check_channel_admissible(q);
        FAIL("expected an exceptional-parameter error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Exceptional);
    }
    q.gamma = 0.1;
    CHECK_NOTHROW(check_channel_admissible(q));
}

TEST_CASE("cutoff mollifier and cap rule") {
    CHECK(cutoff_mollifier(0.05, 0.1) == 1.0);
    CHECK(cutoff_mollifier(-0.25, 0.1) == 0.0);
    CHECK(cutoff_mollifier(0.15, 0.1) == doctest::Approx(0.5));
    for (double c : {-0.6, 0.0, 0.35}) {
        const SphereRule cap = cap_rule(Vec3(1, 1, 0).normalized(), c, 16, 32);
        double area = 0.0, first = 0.0;
        for (int i = 0; i < cap.size(); ++i) {
            area += cap.weights[i];
            first += cap.weights[i] * cap.nodes[i].dot(Vec3(1, 1, 0).normalized());
            CHECK(cap.nodes[i].dot(Vec3(1, 1, 0).normalized()) >= c - 1e-14);
        }
        CHECK(area == doctest::Approx(2.0 * kPi * (1.0 - c)).epsilon(1e-12));
        CHECK(first == doctest::Approx(kPi * (1.0 - c * c)).epsilon(1e-12));
    }
}

TEST_CASE("boundary values from the split route match the resolvent-trace identity") {
    const SpatialGrid g = build_grid(6.0, 12, 11);
    const FreeResolvent R(g);
    const GaussianSource f{Vec3(0.2, -0.1, 0.3), 1.0, 1.0};
    CVec fv(g.size());
    for (int j = 0; j < g.size(); ++j) fv[j] = f.value(g.points[j]);
    for (Side side : {Side::Plus, Side::Minus}) {
        FaddeevParams q;
        q.p_perp = Vec3(1.0, 0.0, 0.0);
        q.z = cplx(0.7, 0.0);
        q.boundary = side;
        const CVec rhs = boundary_identity_rhs(R, q, fv, 48);
        double num = 0.0, den = 0.0;
        for (int j = 0; j < g.size(); j += 7) {
            if (g.radius(j) > 2.0) continue;
            const cplx v = faddeev_split_at(q, f, g.points[j]).total();
            num += std::norm(v - rhs[j]);
            den += std::norm(v);
        }
        CHECK(std::sqrt(num / den) < 1e-2);
    }
}

TEST_CASE("CGO solution satisfies the Floquet equation weakly") {
    const SpatialGrid g = build_grid(5.0, 10, 7);
    const FactorizedPotential F = factorize(sample_potential(preset_potential("driven-gaussian"), g), g);
    const double lambda = 0.37, rho = 4.0;
    FaddeevParams q;
    const double P = std::sqrt(lambda + rho * rho);
    q.p_perp = Vec3(0.6 * P, 0.8 * P, 0.0);
    q.z = cplx(0.0, rho);
    CgoOptions opt;
    opt.krule.K = 5.0;
    opt.max_weak_residual = 1.0;
    const CgoSolution s = solve_cgo(g, F, q, 0, lambda, opt);
    CHECK(s.report.residual < 1e-9);
    CHECK(s.report.weak_residual >= 0.0);
    CHECK(s.report.weak_residual < 2e-2);
    // Phi -> e^{imt} as the potential becomes negligible relative to rho
    CHECK(std::abs(s.reduced.col(0)[0] - 1.0) < 0.05);
    // p.p must equal lambda - m
    FaddeevParams bad = q;
    bad.p_perp *= 1.1;
    CHECK_THROWS_AS(solve_cgo(g, F, bad, 0, lambda, opt), Error);
}

} // TEST_SUITE

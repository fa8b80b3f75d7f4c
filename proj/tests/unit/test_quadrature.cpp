// Quadrature rules: exactness oracles and randomized polynomial properties.

#include "doctest.h"
#include "floquet/quadrature.hpp"

#include <cmath>
#include <random>

using namespace flq;

namespace {

// Exact sphere moment of x^a y^b z^c (zero unless all exponents are even).
double sphere_moment(int a, int b, int c) {
    if (a % 2 || b % 2 || c % 2) return 0.0;
    const double ha = 0.5 * (a + 1), hb = 0.5 * (b + 1), hc = 0.5 * (c + 1);
    return 2.0 * std::tgamma(ha) * std::tgamma(hb) * std::tgamma(hc) / std::tgamma(ha + hb + hc);
}

double apply_rule(const SphereRule& s, int a, int b, int c) {
    double acc = 0.0;
    for (int i = 0; i < s.size(); ++i)
        acc += s.weights[i] * std::pow(s.nodes[i].x(), a) * std::pow(s.nodes[i].y(), b) * std::pow(s.nodes[i].z(), c);
    return acc;
}

} // namespace

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
    for (int n : {1, 2, 5, 12, 40}) {
        const Rule1D r = gauss_legendre(n, 0.5, 2.0);
        for (int p = 0; p <= 2 * n - 1; ++p) {
            double acc = 0.0;
            for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * std::pow(r.x[i], p);
            const double exact = (std::pow(2.0, p + 1) - std::pow(0.5, p + 1)) / (p + 1);
            CHECK(acc == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("composite Gauss covers every panel") {
    const Rule1D r = composite_gauss({0.0, 1.0, 3.0, 3.5}, 6);
    CHECK(r.x.size() == 18);
    double acc = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * std::exp(r.x[i]);
    CHECK(acc == doctest::Approx(std::exp(3.5) - 1.0).epsilon(1e-12));
}

TEST_CASE("periodic trapezoid is exact for trigonometric polynomials") {
    const Rule1D r = periodic_trapezoid(16);
    for (int k = 0; k < 16; ++k) {
        double c = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i) c += r.w[i] * std::cos(k * r.x[i]);
        CHECK(c == doctest::Approx(k == 0 ? 2.0 * kPi : 0.0).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("Legendre polynomials match closed forms") {
    for (double x : {-0.9, -0.3, 0.0, 0.41, 1.0}) {
        const auto P = legendre_all(4, x);
        CHECK(P[0] == doctest::Approx(1.0));
        CHECK(P[1] == doctest::Approx(x));
        CHECK(P[2] == doctest::Approx(0.5 * (3 * x * x - 1)));
        CHECK(P[3] == doctest::Approx(0.5 * (5 * x * x * x - 3 * x)));
        CHECK(P[4] == doctest::Approx((35 * std::pow(x, 4) - 30 * x * x + 3) / 8));
    }
}

TEST_CASE("Lagrange basis reproduces polynomials and is a partition of unity") {
    const Rule1D g = gauss_legendre(7, 0.0, 3.0);
    const Lagrange lag(g.x);
    std::vector<double> b(7);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = u(rng);
        lag.basis(x, b.data());
        double sum = 0.0, cubic = 0.0;
        for (int i = 0; i < 7; ++i) {
            sum += b[i];
            cubic += b[i] * std::pow(g.x[i], 6);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cubic == doctest::Approx(std::pow(x, 6)).epsilon(1e-10));
    }
    lag.basis(g.x[3], b.data());
    CHECK(b[3] == doctest::Approx(1.0));
}

TEST_CASE("Lebedev rules are exact up to their degree") {
    for (int deg : lebedev_degrees()) {
        const SphereRule s = lebedev(deg);
        CHECK(s.degree == deg);
        double wsum = 0.0;
        for (double w : s.weights) wsum += w;
        CHECK(wsum == doctest::Approx(4.0 * kPi).epsilon(1e-13));
        for (const Vec3& v : s.nodes) CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
        for (int a = 0; a <= deg; ++a)
            for (int b = 0; a + b <= deg; ++b)
                for (int c = 0; a + b + c <= deg; ++c)
                    CHECK(apply_rule(s, a, b, c) == doctest::Approx(sphere_moment(a, b, c)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("Lebedev lookup by point count and unsupported degrees") {
    CHECK(lebedev_by_points(26).size() == 26);
    CHECK(lebedev_by_points(26).degree == 7);
    CHECK_THROWS_AS(lebedev(4), Error);
    CHECK_THROWS_AS(lebedev(33), Error);
}

TEST_CASE("product sphere rule integrates random polynomials") {
    const SphereRule s = product_sphere(12, 24);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 6);
    for (int trial = 0; trial < 30; ++trial) {
        const int a = d(rng), b = d(rng), c = d(rng);
        CHECK(apply_rule(s, a, b, c) == doctest::Approx(sphere_moment(a, b, c)).epsilon(1e-12).scale(1.0));
    }
}

} // TEST_SUITE

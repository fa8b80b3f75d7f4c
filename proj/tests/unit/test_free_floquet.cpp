// Free resolvent, traces and eigenfunctions against closed-form oracles.

#include "doctest.h"
#include "floquet/free_floquet.hpp"
#include "floquet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace flq;

namespace {

// int e^{ik|x-y|} / (4 pi |x-y|) e^{-|y|^2} dy evaluated at |x| = r by a fine
// radial quadrature of i k j0(k r<) h0(k r>) (any r).
cplx gaussian_convolution(double k, double r) {
    std::vector<double> breaks{0.0, 0.5 * r, r, r + 0.5, 2.0, 4.0, 8.0};
    std::sort(breaks.begin(), breaks.end());
    const Rule1D fine = composite_gauss(breaks, 120);
    cplx acc = 0.0;
    for (std::size_t q = 0; q < fine.x.size(); ++q) {
        const double rp = fine.x[q];
        const double rl = std::min(r, rp), rg = std::max(r, rp);
        const cplx j0 = std::sin(k * rl) / (k * rl);
        const cplx h0 = -kI * std::exp(kI * k * rg) / (k * rg);
        acc += fine.w[q] * kI * k * j0 * h0 * std::exp(-rp * rp) * rp * rp;
    }
    return acc;
}

CVec radial_gaussian(const SpatialGrid& g) {
    CVec f(g.size());
    for (int j = 0; j < g.size(); ++j) f[j] = std::exp(-g.radius(j) * g.radius(j));
    return f;
}

} // namespace

TEST_SUITE("free_floquet") {

TEST_CASE("Helmholtz kernel and eigenfunction normalization") {
    CHECK(std::abs(helmholtz_kernel(cplx(4.0, 0.0), 0.5) - std::exp(kI * 1.0) / (4.0 * kPi * 0.5)) < 1e-15);
    // closed channel: decays with Im sqrt(z) > 0
    CHECK(std::abs(helmholtz_kernel(cplx(-1.0, 0.0), 2.0) - std::exp(-2.0) / (8.0 * kPi)) < 1e-15);
    const double lambda = 2.6;
    const double c = eigenfunction_normalization(1, lambda);
    CHECK(c == doctest::Approx(std::pow(1.6, 0.25) / (std::sqrt(2.0) * 4.0 * kPi * kPi)));
    const Vec3 nu(0, 0.6, 0.8), x(0.1, -0.4, 1.2);
    const cplx e = free_eigenfunction(1, lambda, nu, 0.7, x);
    CHECK(std::abs(e - c * std::exp(kI * 0.7) * std::exp(kI * std::sqrt(1.6) * nu.dot(x))) < 1e-15);
}

TEST_CASE("free resolvent on a radial Gaussian matches the radial Green function") {
    const double k = 1.3;
    double err_coarse = 0.0, err_fine = 0.0;
    for (int n_r : {20, 40}) {
        const SpatialGrid g = build_grid(6.0, n_r, 7);
        const FreeResolvent R(g);
        const CVec u = R.apply(cplx(k * k, 0.0), Side::Plus, radial_gaussian(g));
        double err = 0.0;
        for (int a = 0; a < g.n_r(); a += 3) {
            const cplx ref = gaussian_convolution(k, g.radial_nodes[a]);
            err = std::max(err, std::abs(u[a * g.n_ang()] - ref) / std::abs(ref));
        }
        (n_r == 20 ? err_coarse : err_fine) = err;
    }
    CHECK(err_coarse < 1e-4);
    CHECK(err_fine < 1e-8);
}

TEST_CASE("the two boundary values are complex conjugates for real data") {
    const SpatialGrid g = build_grid(5.0, 10, 7);
    const FreeResolvent R(g);
    const CVec f = radial_gaussian(g);
    const CVec up = R.apply(cplx(0.8, 0.0), Side::Plus, f);
    const CVec um = R.apply(cplx(0.8, 0.0), Side::Minus, f);
    CHECK((up - um.conjugate()).norm() < 1e-12 * up.norm());
}

TEST_CASE("off-grid convolution and its radial derivative outside the support") {
    const SpatialGrid g = build_grid(6.0, 24, 15);
    const CVec f = radial_gaussian(g);
    const double k = 1.1;
    for (const Vec3& x : {Vec3(0.0, 0.0, 8.0), Vec3(3.0, -4.0, 5.0)}) {
        const double r = x.norm();
        const cplx ref = std::exp(kI * k * r) / r * (std::sqrt(kPi) / 4.0) * std::exp(-k * k / 4.0);
        CHECK(std::abs(convolve_at(g, cplx(k * k, 0.0), Side::Plus, f, x) - ref) < 1e-8 * std::abs(ref));
        const cplx dref = (kI * k - 1.0 / r) * ref;
        CHECK(std::abs(convolve_radial_derivative_at(g, cplx(k * k, 0.0), Side::Plus, f, x) - dref) <
              1e-8 * std::abs(dref));
    }
}

TEST_CASE("Fourier transform of a Gaussian by grid quadrature") {
    const SpatialGrid g = build_grid(6.0, 24, 15);
    const CVec f = radial_gaussian(g);
    for (const Vec3& k : {Vec3(0, 0, 0), Vec3(0.5, 0.2, -0.7), Vec3(0, 2.0, 0)}) {
        const double exact = std::pow(2.0, -1.5) * std::exp(-k.squaredNorm() / 4.0);
        CHECK(std::abs(grid_fourier(g, f, k) - exact) < 1e-8);
    }
}

TEST_CASE("band-limited plane wave converges to the plane wave near the origin") {
    const SpatialGrid g = build_grid(2.0, 8, 31);
    const Vec3 nu = Vec3(1, 2, 2).normalized();
    const double kappa = 1.2;
    const CVec pw = bandlimited_plane_wave(g, kappa, nu, g.band_limit());
    for (int j = 0; j < g.size(); ++j) {
        if (g.radius(j) > 1.5) continue;
        CHECK(std::abs(pw[j] - std::exp(kI * kappa * nu.dot(g.points[j]))) < 1e-9);
    }
}

TEST_CASE("trace adjoint is the adjoint of the trace (random vectors)") {
    const SpatialGrid g = build_grid(4.0, 8, 11);
    std::mt19937 rng(5);
    std::normal_distribution<double> n01;
    CVec f(g.size()), h(g.n_ang());
    for (auto& v : f) v = cplx(n01(rng), n01(rng));
    for (auto& v : h) v = cplx(n01(rng), n01(rng));
    const double rho = 1.7;
    const CVec Tf = trace_operator(rho, g, f);
    const CVec Tsh = trace_adjoint(rho, g, g.sphere, h);
    cplx lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < g.n_ang(); ++i) lhs += g.sphere.weights[i] * std::conj(h[i]) * Tf[i];
    for (int j = 0; j < g.size(); ++j) rhs += g.weights[j] * std::conj(Tsh[j]) * f[j];
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
}

TEST_CASE("channel-diagonal R0 acts per channel") {
    const SpatialGrid g = build_grid(4.0, 8, 7);
    const FreeResolvent R(g);
    const ChannelSet ch = channel_set(0.6, 1);
    GridFunction f(-1, 3, g.size());
    for (int m = -1; m <= 1; ++m) f.col(m) = radial_gaussian(g) * double(m + 2);
    const GridFunction u = apply_R0(R, ch, Side::Plus, f);
    for (int m = -1; m <= 1; ++m) {
        const CVec ref = R.apply(cplx(0.6 - m, 0.0), Side::Plus, f.col(m));
        CHECK((u.col(m) - ref).norm() < 1e-13 * ref.norm());
    }
}

} // TEST_SUITE

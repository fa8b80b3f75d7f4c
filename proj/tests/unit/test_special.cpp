// Special functions against closed forms and tabulated reference values.

#include "doctest.h"
#include "floquet/special.hpp"

#include <cmath>
#include <vector>

using namespace flq;

TEST_SUITE("special") {

TEST_CASE("spherical Bessel j and y match closed forms") {
    for (double x : {0.05, 0.7, 2.3, 9.0, 31.0}) {
        std::vector<double> j(3), y(3);
        sph_bessel_j(2, x, j.data());
        sph_bessel_y(2, x, y.data());
        const double s = std::sin(x), c = std::cos(x);
        CHECK(j[0] == doctest::Approx(s / x).epsilon(1e-12));
        CHECK(j[1] == doctest::Approx(s / (x * x) - c / x).epsilon(1e-10));
        CHECK(j[2] == doctest::Approx((3 / (x * x) - 1) * s / x - 3 * c / (x * x)).epsilon(1e-8));
        CHECK(y[0] == doctest::Approx(-c / x).epsilon(1e-12));
        CHECK(y[1] == doctest::Approx(-c / (x * x) - s / x).epsilon(1e-12));
    }
}

TEST_CASE("high-order j is stable for small arguments") {
    std::vector<double> j(21);
    sph_bessel_j(20, 0.1, j.data());
    // leading term x^l / (2l+1)!!
    double dfact = 1.0;
    for (int k = 1; k <= 41; k += 2) dfact *= k;
    CHECK(j[20] == doctest::Approx(std::pow(0.1, 20) / dfact).epsilon(1e-3));
    CHECK(std::isfinite(j[20]));
}

TEST_CASE("scaled modified spherical Bessel functions") {
    for (double x : {0.3, 1.0, 4.0, 25.0}) {
        std::vector<double> i(2), k(2);
        sph_bessel_i_scaled(1, x, i.data());
        sph_bessel_k_scaled(1, x, k.data());
        CHECK(i[0] == doctest::Approx(std::exp(-x) * std::sinh(x) / x).epsilon(1e-12));
        CHECK(k[0] == doctest::Approx(1.0 / x).epsilon(1e-12));
        CHECK(k[1] == doctest::Approx((1.0 / x) * (1.0 + 1.0 / x)).epsilon(1e-12));
    }
}

TEST_CASE("Hankel H0 on the real axis matches J0 + i Y0 tables") {
    struct Ref { double x, j0, y0; };
    const Ref refs[] = {{1.0, 0.7651976865579666, 0.08825696421567696},
                        {5.0, -0.1775967713143383, -0.3085176252490338},
                        {10.0, -0.2459357644513483, 0.05567116728359939}};
    for (const auto& r : refs) {
        const cplx h = hankel1_0(cplx(r.x, 0.0));
        CHECK(h.real() == doctest::Approx(r.j0).epsilon(1e-10));
        CHECK(h.imag() == doctest::Approx(r.y0).epsilon(1e-10));
        CHECK(bessel_j0(cplx(r.x, 0.0)).real() == doctest::Approx(r.j0).epsilon(1e-10));
    }
}

TEST_CASE("Hankel H0 is continuous across the series/asymptotic switch") {
    for (double arg : {0.0, 0.7, 1.4, 2.5}) {
        const cplx in = std::polar(6.0 - 1e-11, arg), out = std::polar(6.0 + 1e-11, arg);
        CHECK(std::abs(hankel1_0(in) - hankel1_0(out)) < 1e-8);
    }
}

TEST_CASE("Hankel H0 decays in the upper half plane") {
    const cplx h = hankel1_0(cplx(0.0, 8.0));
    // H0^(1)(i y) = (2 / (i pi)) K0(y); K0(8) = 1.4647070522281538e-4
    CHECK(std::abs(h - 2.0 / (kI * kPi) * 1.4647070522281538e-4) < 1e-12);
}

TEST_CASE("complex spherical j and h satisfy the Wronskian") {
    for (cplx w : {cplx(0.8, 0.3), cplx(4.0, 1.5), cplx(12.0, -0.5)}) {
        std::vector<cplx> j(6), h(6);
        sph_bessel_jh(5, w, j.data(), h.data());
        CHECK(std::abs(j[0] - std::sin(w) / w) < 1e-12 * (1.0 + std::abs(j[0])));
        CHECK(std::abs(h[0] - std::exp(kI * w) / (kI * w)) < 1e-12 * std::abs(h[0]));
        // j_l h_{l-1} - j_{l-1} h_l = i / w^2 (up to sign convention: j_l y_{l-1} - j_{l-1} y_l = 1/w^2)
        for (int l = 1; l <= 5; ++l) {
            const cplx wr = j[l] * h[l - 1] - j[l - 1] * h[l];
            CHECK(std::abs(wr - kI / (w * w)) < 1e-9 * std::abs(1.0 / (w * w)));
        }
    }
}

} // TEST_SUITE

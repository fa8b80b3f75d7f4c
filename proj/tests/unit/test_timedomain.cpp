// Split-step propagation: free-flow oracle, conservation, periodicity, order,
// lattice potentials and snapshot I/O.

#include "doctest.h"
#include "floquet/timedomain.hpp"

#include <cmath>
#include <filesystem>

using namespace flq;

TEST_SUITE("timedomain") {

TEST_CASE("lattice stores nodes in FFT order with a half-cell offset") {
    const Lattice lat{{8, 8, 16}, 0.5};
    CHECK(lat.coord(0, 0) == doctest::Approx(0.25));
    CHECK(lat.coord(0, 3) == doctest::Approx(1.75));
    CHECK(lat.coord(0, 4) == doctest::Approx(-1.75));
    CHECK(lat.coord(0, 7) == doctest::Approx(-0.25));
    CHECK(lat.wavenumber(2, 1) == doctest::Approx(2.0 * kPi / 8.0));
    CHECK(lat.wavenumber(2, 15) == doctest::Approx(-2.0 * kPi / 8.0));
    const Vec3 p = lat.point(1 * 8 * 16 + 2 * 16 + 3);
    CHECK((p - Vec3(lat.coord(0, 1), lat.coord(1, 2), lat.coord(2, 3))).norm() < 1e-15);
    CHECK(lat.size() == 1024);
}

TEST_CASE("free split-step flow matches the closed-form Gaussian") {
    const Lattice lat{{48, 48, 64}, 0.5};
    const Vec3 x0(0, 0, -4), k0(0, 0, 1.0);
    const double w = 1.5;
    const Wavepacket p = gaussian_packet(lat, x0, k0, w);
    PropagateReport rep;
    const Wavepacket q = propagate(p, nullptr, 0.0, 1.0, 1.0 / 64.0, &rep);
    double err = 0.0;
    for (std::size_t i = 0; i < lat.size(); ++i)
        err = std::max(err, std::abs(q.data[static_cast<Eigen::Index>(i)] - free_gaussian(lat.point(i), q.t, x0, k0, w)));
    CHECK(err < 1e-6);
    CHECK(rep.warning.empty());
    CHECK(rep.steps == 64);
    const Wavepacket r = free_propagate(p, 1.0);
    CHECK((r.data - q.data).norm() < 1e-10 * q.data.norm());
}

TEST_CASE("driven propagation: unitarity, period composition and second order") {
    const Lattice lat{{32, 32, 32}, 0.5};
    const Wavepacket p = gaussian_packet(lat, Vec3(0, 0, -2), Vec3(0, 0, 1.0), 1.2);
    const LatticePotential V = lattice_potential(preset_potential("driven-gaussian"), lat);
    const double T = 2.0 * kPi, dt = T / 64.0;

    PropagateReport rep;
    const Wavepacket c = propagate(p, &V, 0.0, 5.0 * T, dt, &rep);
    CHECK(rep.norm_drift < 1e-12);
    CHECK(c.t == doctest::Approx(5.0 * T));

    const Wavepacket a1 = propagate(p, &V, 0.0, T, dt);
    const Wavepacket a2 = propagate(a1, &V, T, 2.0 * T, dt);
    // the potential is 2 pi periodic: U(2T, T) = U(T, 0)
    const Wavepacket b2 = propagate(a1, &V, 0.0, T, dt);
    CHECK((a2.data - b2.data).norm() < 1e-12 * a2.data.norm());

    const Wavepacket r1 = propagate(p, &V, 0.0, T, T / 16.0);
    const Wavepacket r2 = propagate(p, &V, 0.0, T, T / 32.0);
    const Wavepacket r3 = propagate(p, &V, 0.0, T, T / 64.0);
    const double ratio = (r1.data - r2.data).norm() / (r2.data - r3.data).norm();
    CHECK(ratio > 3.5);  // at least second order in dt
}

TEST_CASE("propagation requires an integral number of steps") {
    const Lattice lat{{16, 16, 16}, 0.5};
    const Wavepacket p = gaussian_packet(lat, Vec3::Zero(), Vec3::Zero(), 1.0);
    CHECK_THROWS_AS(propagate(p, nullptr, 0.0, 1.0, 0.3), Error);
}

TEST_CASE("lattice potential: Yukawa cell averages reproduce the volume integral") {
    const Lattice lat{{32, 32, 32}, 0.5};
    const LatticePotential V = lattice_potential(preset_potential("yukawa"), lat);
    const CVec& v0 = V.modes.at(0);
    const cplx sum = v0.sum() * lat.cell_volume();
    // int -0.5 e^{-1.5 r} / r dx = -0.5 * 4 pi / 1.5^2
    const double exact = -0.5 * 4.0 * kPi / 2.25;
    CHECK(std::abs(sum - exact) < 1e-4 * std::abs(exact));

    const LatticePotential D = lattice_potential(preset_potential("driven-gaussian"), lat);
    const RVec at = D.at(0.9);
    const Vec3 x = lat.point(123);
    CHECK(at[123] == doctest::Approx(preset_potential("driven-gaussian").value(0.9, x)).epsilon(1e-12));
}

TEST_CASE("oversized lattices are refused") {
    const Lattice lat{{4096, 4096, 4096}, 0.5};
    try {
        gaussian_packet(lat, Vec3::Zero(), Vec3::Zero(), 1.0);
        FAIL("expected a sizing error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Sizing);
    }
}

TEST_CASE("packet spec amplitude gives a unit-norm packet") {
    PacketSpec s;
    s.lambda = 1.3;
    s.sigma_par = 0.1;
    s.sigma_perp = 0.15;
    // integrate |a|^2 over a box around kappa nu'
    const double kappa = s.kappa();
    const int n = 60;
    const double half = 0.8, dk = 2.0 * half / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                const Vec3 k(-half + (i + 0.5) * dk, -half + (j + 0.5) * dk, kappa - half + (l + 0.5) * dk);
                acc += std::norm(s.amplitude(k)) * dk * dk * dk;
            }
    // ||phi_0||^2 = (2 pi)^3 int |a|^2 dk
    CHECK(acc * std::pow(2.0 * kPi, 3) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(channel_constant(1.3, -1) == doctest::Approx(std::pow(2.3, 0.25) / (std::sqrt(2.0) * 4.0 * kPi * kPi)));
}

TEST_CASE("packet and transition file round trips") {
    const Lattice lat{{8, 8, 8}, 0.5};
    Wavepacket p = gaussian_packet(lat, Vec3(0.1, 0, 0), Vec3(0, 1, 0), 0.8);
    p.t = 3.25;
    const auto dir = std::filesystem::temp_directory_path();
    const std::string pp = (dir / "floquet_unit_pkt.bin").string();
    write_packet(pp, p);
    const Wavepacket q = read_packet(pp);
    std::filesystem::remove(pp);
    CHECK(q.lattice.n == p.lattice.n);
    CHECK(q.lattice.h == p.lattice.h);
    CHECK(q.t == p.t);
    CHECK((q.data - p.data).norm() == 0.0);

    TransitionResult r;
    r.T[{0, 0, 0, 0}] = cplx(1.0 / 3.0, -2e-7);
    r.T[{1, 0, 1, 0}] = cplx(-4.5e-3, 0.125);
    r.band_mass[0] = 0.5;
    r.band_mass[1] = 0.25;
    r.scattered_mass = 0.76;
    r.quantized_fraction = 0.99;
    r.inside_fraction = 1e-4;
    r.final_time = 120.5;
    const std::vector<Vec3> dirs{Vec3(0, 0, 1), Vec3(0, std::sin(0.5), std::cos(0.5))};
    const std::string tp = (dir / "floquet_unit_transition.csv").string();
    write_transition_csv(tp, r, dirs);
    std::vector<Vec3> dirs_back;
    const TransitionResult s = read_transition_csv(tp, &dirs_back);
    std::filesystem::remove(tp);
    CHECK(s.T == r.T);
    CHECK(s.band_mass == r.band_mass);
    CHECK(s.quantized_fraction == r.quantized_fraction);
    CHECK(s.final_time == r.final_time);
    REQUIRE(dirs_back.size() == 2);
    CHECK((dirs_back[1] - dirs[1]).norm() == 0.0);
    CHECK_THROWS_AS(read_packet("/nonexistent/pkt.bin"), Error);
}

} // TEST_SUITE

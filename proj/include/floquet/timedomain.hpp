// timedomain.hpp -- split-step propagation of i d_t phi = (-Delta + V(t, x)) phi
// on a periodic Cartesian lattice, and wavepacket extraction of transition
// amplitudes as an independent cross-check of the stationary S-matrix.
//
// Extraction. An incoming packet phi_0 = int a(k') e^{ik'.x} dk' (narrow
// around kappa nu', kappa^2 = lambda - m) is propagated through the collision.
// The scattered part Phi_sc = U(T, 0) phi_0 - U_0(T) phi_0, pulled back to
// t = 0 by the free flow, has the momentum density
//   chi(k) = e^{i k^2 T} Phi_sc^(T, k) = -2 pi i sum_n A_n(k) W(sqrt(k^2 + n - m)),
//   W(kappa') = (kappa'/2) int_{S^2} a(kappa' w) dw        (shell smearing),
//   A_n(k) = (2 pi)^{-3/2} int e^{-ik.x} (V psi)_n dx,
// on the shell |k|^2 = lambda - n, and T_{nm}(nu, nu') = 2 pi c_n c_m (2 pi)^{3/2} A_n.

#pragma once

#include "floquet/common.hpp"
#include "floquet/domain.hpp"

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace flq {

// ---- lattice ----

// Periodic lattice with spacing h stored in FFT order: index j along an axis
// sits at ((j < n/2) ? j : j - n) h + h/2 (the half-cell offset keeps nodes off
// the origin, where Yukawa profiles are singular). Row-major, last axis fastest.
struct Lattice {
    std::array<int, 3> n{64, 64, 64};
    double h = 0.5;

    std::size_t size() const { return static_cast<std::size_t>(n[0]) * n[1] * n[2]; }
    double coord(int axis, int j) const;
    double wavenumber(int axis, int j) const;  // 2 pi j' / (n h), j' the signed index
    Vec3 point(std::size_t idx) const;
    Vec3 wavevector(std::size_t idx) const;
    double nyquist() const { return kPi / h; }
    double cell_volume() const { return h * h * h; }
    Vec3 offset() const { return Vec3::Constant(0.5 * h); }
};

struct Wavepacket {
    Lattice lattice;
    CVec data;
    double t = 0.0;

    double norm() const;  // discrete L2 norm
};

// Isotropic Gaussian exp(-|x - x0|^2 / (2 w^2) + i k0.(x - x0)) sampled on the lattice.
Wavepacket gaussian_packet(const Lattice& lat, const Vec3& x0, const Vec3& k0, double w);

// Closed-form free evolution of the Gaussian above under i d_t = -Delta.
cplx free_gaussian(const Vec3& x, double t, const Vec3& x0, const Vec3& k0, double w);

// ---- potential on the lattice ----

struct LatticePotential {
    Lattice lattice;
    std::map<int, CVec> modes;  // V_d at the lattice nodes

    // V(t, x) = Re sum_d V_d(x) e^{i d t}
    RVec at(double t) const;
};

// Samples the analytic modes; singular (Yukawa) modes are cell-averaged.
LatticePotential lattice_potential(const PotentialSpec& spec, const Lattice& lat);
// Requires V.spec (the analytic source); throws Validation otherwise.
LatticePotential lattice_potential(const FourierPotential& V, const Lattice& lat);

// ---- propagation ----

struct PropagateReport {
    int steps = 0;
    double norm_drift = 0.0;     // | ||phi(t1)|| / ||phi(t0)|| - 1 |
    double nyquist_mass = 0.0;   // fraction of |phi^|^2 beyond 0.8 Nyquist in any axis
    std::string warning;         // spectral-support warning (empty if fine)
};

// Strang step: half kinetic e^{-i dt k^2 / 2}, potential phase e^{-i dt V(t_mid, x)},
// half kinetic; adjacent half steps are fused. V may be null (free flow).
// Requires (t1 - t0) / dt integral (Validation).
Wavepacket propagate(const Wavepacket& pkt, const LatticePotential* V, double t0, double t1, double dt,
                     PropagateReport* report = nullptr);

// Exact free flow by one Fourier multiplier.
Wavepacket free_propagate(const Wavepacket& pkt, double t1);

// ---- transition extraction ----

struct PacketSpec {
    int m = 0;                  // incident channel
    double lambda = 1.3;        // quasi-energy; incident energy lambda - m
    Vec3 direction{0, 0, 1};    // nu'
    double sigma_par = 0.04;    // momentum spread along nu' (std of |a|^2)
    double sigma_perp = 0.12;   // transverse momentum spread
    double start = 55.0;        // initial centre at -start nu'

    double energy() const { return lambda - m; }
    double kappa() const { return std::sqrt(energy()); }
    cplx amplitude(const Vec3& k) const;  // a(k), normalized to unit L2 norm of phi_0
};

struct TransitionOptions {
    Lattice lattice{{64, 64, 320}, 0.75};
    double dt = 2.0 * kPi / 64.0;
    std::vector<int> channels{-1, 0, 1};   // outgoing channels n (open ones are used)
    std::vector<Vec3> directions{Vec3(0, 0, 1)};
    double cone = 0.15;                    // half-angle of the projection cone (rad)
    double band = 0.3;                     // energy half-width around lambda - n
    double extra_time = 10.0;              // after the centre reaches +start nu'
    double clear_radius = 6.0;             // interaction region used by the clearing check
    double max_inside = 0.01;              // allowed |phi|^2 fraction inside clear_radius
};

struct TransitionResult {
    // (n, m, direction index, 0) -> T_{nm}(lambda; nu, nu')
    std::map<std::tuple<int, int, int, int>, cplx> T;
    std::map<int, double> band_mass;  // scattered mass per outgoing channel band
    double scattered_mass = 0.0;      // total |chi|^2 mass
    double quantized_fraction = 0.0;  // share of scattered mass inside the channel bands
    double inside_fraction = 0.0;     // |phi|^2 left inside clear_radius at the end
    double final_time = 0.0;
    PropagateReport propagation;
};

// Throws Numerical ("inconclusive") when the packet has not cleared the region.
TransitionResult extract_transition(const PacketSpec& pkt, const PotentialSpec& V, const TransitionOptions& opt = {});

// Channel normalization c_n = (lambda - n)^{1/4} / (sqrt 2 (2 pi)^2).
double channel_constant(double lambda, int n);

// ---- I/O ----

// Binary snapshot: "FLQPKT1\n", then n[3] (int32), h, t (float64), data (complex128).
void write_packet(const std::string& path, const Wavepacket& pkt);
Wavepacket read_packet(const std::string& path);

// CSV `n,m,dir,nx,ny,nz,re,im` after '#' summary lines.
void write_transition_csv(const std::string& path, const TransitionResult& r, const std::vector<Vec3>& directions);
// Reads the amplitude map and summary back; `directions` receives the unit vectors.
TransitionResult read_transition_csv(const std::string& path, std::vector<Vec3>* directions = nullptr);

} // namespace flq

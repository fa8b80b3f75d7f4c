// domain.hpp -- spatial grids, time-periodic potentials, their factorization
// V = V1 V2, and the open/closed channel bookkeeping at fixed quasi-energy.

#pragma once

#include "floquet/common.hpp"
#include "floquet/quadrature.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace flq {

// ----------------------------------------------------------------- grid ----

// Radial Gauss-Legendre nodes on (0, L] times a Lebedev rule. Node index is
// a * n_ang + i for radial node a and angular node i.
struct SpatialGrid {
    std::vector<double> radial_nodes;
    std::vector<double> radial_weights;  // plain GL weights on [0, L] (no r^2)
    SphereRule sphere;
    double L = 0.0;

    int n_r() const { return static_cast<int>(radial_nodes.size()); }
    int n_ang() const { return sphere.size(); }
    int size() const { return n_r() * n_ang(); }
    // Highest spherical-harmonic degree resolved exactly in products: floor(degree / 2).
    int band_limit() const { return sphere.degree / 2; }

    Vec3 point(int idx) const;
    double radius(int idx) const { return radial_nodes[idx / n_ang()]; }
    // Volume weight including the r^2 Jacobian.
    double weight(int idx) const;

    std::vector<Vec3> points;   // cached node positions
    std::vector<double> weights;  // cached volume weights
    std::string hash() const;
};

SpatialGrid build_grid(double L, int n_r, int angular_order);

// Default cutoff radius for a potential with decay rate delta0.
double default_cutoff(double delta0, double eps_trunc = 1e-8);

// ------------------------------------------------------------ potential ----

// Analytic radial profile of one temporal mode: amplitude * shape(r).
struct ModeSpec {
    int m = 0;
    cplx amplitude = 0.0;
    double width = 1.0;                     // Gaussian width / Yukawa range
    std::vector<double> table_r;            // tabulated profile (kind = table)
    std::vector<cplx> table_v;
};

enum class PotentialKind { Gaussian, Yukawa, Table };

// A time-periodic potential V(t,x) = sum_m e^{imt} V_m(|x|) with analytic or
// tabulated radial mode profiles.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::Gaussian;
    double delta0 = 1.0;
    std::vector<ModeSpec> modes;

    cplx mode_value(int m, double r) const;
    double value(double t, const Vec3& x) const;  // real part of the synthesized sum
    int max_mode() const;
    std::vector<int> mode_list() const;
    PotentialSpec scaled(double eps) const;
    bool empty() const;
};

// Named presets used by tests, acceptance and the CLI.
PotentialSpec preset_potential(const std::string& name, double strength_scale = 1.0);
std::vector<std::string> preset_names();

// Mode samples on a spatial grid.
struct FourierPotential {
    std::map<int, CVec> modes;
    double delta0 = 1.0;
    std::shared_ptr<const PotentialSpec> spec;  // analytic source when available

    int max_mode() const;
    CVec mode(int m) const;  // zero vector for absent modes
    int grid_size() const;
};

FourierPotential sample_potential(const PotentialSpec& spec, const SpatialGrid& grid);

// Reality check V_{-m} = conj(V_m); returns the max violation.
double reality_violation(const FourierPotential& V);

struct FactorizedPotential {
    std::map<int, CVec> v1_modes, v2_modes;  // truncated at |m| <= M_V
    std::map<int, CVec> q1_modes, q2_modes;  // with regularizer applied if on
    RMat support_mask;                       // chi_1 on (t-sample, node)
    bool regularizer_on = false;
    int M_V = 0;
    int n_t = 0;
    double truncation_residual = 0.0;        // max |V1 V2 - V| / (1 + |V|) after truncation
    double sample_residual = 0.0;            // same, before truncation (pointwise roots)
    std::vector<double> l3_norms_v1, l3_norms_v2;
    std::optional<std::string> warning;
    FourierPotential source;

    // Modes of the product q1 * q2 (the potential actually seen by the solver).
    std::map<int, CVec> product_modes() const;
    int q1_width() const;
    int q2_width() const;
    bool is_zero() const;
};

struct FactorizeOptions {
    bool regularizer_on = false;
    int M_V = -1;                 // default 2 * max_mode + 4
    int n_t = 0;                  // default: 8 * (M_V + 1) rounded to a power of two
    double warn_threshold = 1e-3;
    double support_threshold = 1e-12;
};

FactorizedPotential factorize(const FourierPotential& V, const SpatialGrid& grid,
                              const FactorizeOptions& opt = {});

// ------------------------------------------------------------- channels ----

struct ChannelSet {
    double lambda = 0.0;
    int M = 0;
    int m_lo = 0, m_hi = 0;       // retained window (m_lo = -M, m_hi = M by default)
    int n_floor = 0;              // the integer with n < lambda < n + 1
    std::vector<int> open;        // ascending
    std::vector<int> closed;      // ascending
    std::vector<int> all() const; // m_lo..m_hi
    int count() const { return m_hi - m_lo + 1; }
    int index(int m) const { return m - m_lo; }

    bool is_open(int m) const { return m < lambda; }
    // Complex momentum sqrt(lambda - m) with Im >= 0 (imaginary for closed channels).
    cplx momentum(int m) const { return sqrt_branch(cplx(lambda - m, 0.0)); }
    double kappa(int m) const;  // open channels only
};

ChannelSet channel_set(double lambda, int M);

// Same as channel_set but with an explicit window [m_lo, m_hi] of retained channels.
ChannelSet channel_window(double lambda, int m_lo, int m_hi);

} // namespace flq

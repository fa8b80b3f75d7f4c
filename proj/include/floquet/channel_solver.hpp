// channel_solver.hpp -- coupled-channel Lippmann-Schwinger systems for the
// distorted waves phi_{-,m} (outgoing scattered part) and phi_{+,m}.

#pragma once

#include "floquet/common.hpp"
#include "floquet/domain.hpp"
#include "floquet/free_floquet.hpp"

#include <map>
#include <memory>
#include <utility>

namespace flq {

// phi_{-,m} is built with R0(lambda + i0), phi_{+,m} with R0(lambda - i0).
enum class WaveSign { Minus, Plus };
inline Side resolvent_side(WaveSign s) { return s == WaveSign::Minus ? Side::Plus : Side::Minus; }

struct SolverReport {
    double residual = 0.0;     // ||(I + K) u - rhs|| / ||rhs||
    double condition = 1.0;    // 1-norm condition estimate of the factorized system
    int unknowns = 0;
};

// Discretization of Q0 = B R0 A on the density channels K = C +- width, where C
// is the retained (resolvent) channel window.
struct CouplingOperator {
    ChannelSet channels;
    int k_lo = 0, k_hi = 0;
    Side side = Side::Plus;
    int n_nodes = 0;
    std::map<std::pair<int, int>, CMat> blocks;  // (k, k') -> N x N, absent = zero

    int n_density() const { return k_hi - k_lo + 1; }
    // sup_k sum_k' ||d_{k,k'}||_F
    double block_norm_sum() const;
    CMat dense() const;
};

// Memory budget for dense complex systems (bytes); exceeding it is a Sizing error.
inline constexpr double kDenseBudgetBytes = 2.5e9;

CouplingOperator assemble_coupling(const FreeResolvent& R, const ChannelSet& channels,
                                   const FactorizedPotential& F, Side side);

struct Incident {
    int m = 0;
    double lambda = 0.0;
    Vec3 nu{0, 0, 1};
};

struct DistortedWave {
    GridFunction psi;   // density V2 phi on the density channels
    GridFunction phi;   // full field on the retained channels
    Incident incident;
    WaveSign sign = WaveSign::Minus;
    SolverReport report;
};

// Incident field c_m e^{i kappa_m nu.x} in channel m (band-limited to the
// grid's angular resolution for the partial-wave resolvent).
CVec incident_field(const FreeResolvent& R, const ChannelSet& ch, int m, const Vec3& nu);

// Density route: LU of (I + Q) on the density channels, then
// phi = phi_m - R0 V1 psi.
DistortedWave solve_distorted_wave(const FreeResolvent& R, const CouplingOperator& Q,
                                   const FactorizedPotential& F, const Incident& inc, WaveSign sign);

// Field route (production): (I + R0_C W_C) phi = phi_m with W = q1 * q2 the
// mode-convolved product; one factorization serves all incident waves.
class FieldSolver {
public:
    FieldSolver(const FreeResolvent& R, const ChannelSet& channels, const FactorizedPotential& F, WaveSign sign);

    const ChannelSet& channels() const { return ch_; }
    WaveSign sign() const { return sign_; }
    double condition() const { return cond_; }
    bool decoupled() const { return decoupled_; }

    // Solve for arbitrary channel-stacked right-hand sides (columns); returns fields.
    CMat solve(const CMat& rhs) const;
    // Apply (I + R0 W) to stacked fields (for residual checks).
    CMat apply(const CMat& phi) const;
    // (V phi)_n for all retained n from a stacked field column.
    GridFunction potential_times(const CVec& phi_stacked) const;

    DistortedWave solve(const Incident& inc) const;
    std::vector<DistortedWave> solve_many(const std::vector<Incident>& incs) const;

    const FreeResolvent& resolvent() const { return R_; }
    const std::map<int, CVec>& product_modes() const { return W_; }
    const FactorizedPotential& factorized() const { return F_; }

private:
    const FreeResolvent& R_;
    const FactorizedPotential& F_;
    ChannelSet ch_;
    WaveSign sign_;
    std::map<int, CVec> W_;
    bool decoupled_ = false;
    int N_ = 0;
    double cond_ = 1.0;
    std::vector<Eigen::PartialPivLU<CMat>> lu_;  // one per channel if decoupled, else one
};

} // namespace flq
